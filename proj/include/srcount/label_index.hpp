#ifndef SRCOUNT_LABEL_INDEX_HPP
#define SRCOUNT_LABEL_INDEX_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace srcount {

// Maps a label interval [a, b] to the contiguous run of positions in the
// label-sorted root string holding characters with labels in [a, b].
// Predecessor search is a binary search over the distinct labels.
class LabelIndex {
public:
    LabelIndex() = default;

    LabelIndex(std::span<const uint64_t> labels, uint64_t universe)
        : u_(universe) {
        std::vector<uint64_t> sorted(labels.begin(), labels.end());
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] > universe)
                throw std::invalid_argument("label exceeds universe bound");
            if (i == 0 || sorted[i] != sorted[i - 1]) {
                distinct_.push_back(sorted[i]);
                cum_.push_back(i + 1);
            } else {
                cum_.back() = i + 1;
            }
        }
    }

    uint64_t universe() const { return u_; }
    std::size_t size() const { return cum_.empty() ? 0 : cum_.back(); }
    const std::vector<uint64_t>& distinct_labels() const { return distinct_; }
    const std::vector<uint64_t>& cumulative() const { return cum_; }

    // 1-based inclusive positions in the sorted label sequence of exactly the
    // labels in [a, b]; nullopt when no label falls in the interval.
    std::optional<std::pair<uint64_t, uint64_t>> label_interval(uint64_t a,
                                                                uint64_t b) const {
        if (a > b) return std::nullopt;
        auto lo = std::lower_bound(distinct_.begin(), distinct_.end(), a);
        auto hi = std::upper_bound(distinct_.begin(), distinct_.end(), b);
        if (lo >= hi) return std::nullopt;
        std::size_t li = static_cast<std::size_t>(lo - distinct_.begin());
        std::size_t hi_idx = static_cast<std::size_t>(hi - distinct_.begin()) - 1;
        uint64_t start = li == 0 ? 1 : cum_[li - 1] + 1;
        return std::make_pair(start, cum_[hi_idx]);
    }

    // Number of distinct-label ranks in [a, b], plus the dense rank interval
    // (0-based) used by the 2D counter.
    std::optional<std::pair<uint32_t, uint32_t>> rank_interval(uint64_t a,
                                                               uint64_t b) const {
        if (a > b) return std::nullopt;
        auto lo = std::lower_bound(distinct_.begin(), distinct_.end(), a);
        auto hi = std::upper_bound(distinct_.begin(), distinct_.end(), b);
        if (lo >= hi) return std::nullopt;
        return std::make_pair(static_cast<uint32_t>(lo - distinct_.begin()),
                              static_cast<uint32_t>(hi - distinct_.begin()) - 1);
    }

    // Dense rank of a label known to occur.
    uint32_t rank_of(uint64_t label) const {
        auto it = std::lower_bound(distinct_.begin(), distinct_.end(), label);
        return static_cast<uint32_t>(it - distinct_.begin());
    }

private:
    uint64_t u_ = 0;
    std::vector<uint64_t> distinct_;
    std::vector<uint64_t> cum_;
};

}  // namespace srcount

#endif
