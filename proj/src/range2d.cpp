#include "srcount/range2d.hpp"

#include <algorithm>

namespace srcount {

RangeCounter2D::RangeCounter2D(std::span<const uint64_t> ys) {
    distinct_.assign(ys.begin(), ys.end());
    std::sort(distinct_.begin(), distinct_.end());
    distinct_.erase(std::unique(distinct_.begin(), distinct_.end()),
                    distinct_.end());
    std::vector<uint32_t> ranks;
    ranks.reserve(ys.size());
    for (uint64_t y : ys) {
        auto it = std::lower_bound(distinct_.begin(), distinct_.end(), y);
        ranks.push_back(static_cast<uint32_t>(it - distinct_.begin()));
    }
    uint32_t sigma = distinct_.empty() ? 1 : static_cast<uint32_t>(distinct_.size());
    wt_ = WaveletTree(std::move(ranks), sigma);
}

std::optional<std::pair<uint32_t, uint32_t>> RangeCounter2D::dense_range(
    uint64_t y1, uint64_t y2) const {
    if (y1 > y2) return std::nullopt;
    auto lo = std::lower_bound(distinct_.begin(), distinct_.end(), y1);
    auto hi = std::upper_bound(distinct_.begin(), distinct_.end(), y2);
    if (lo >= hi) return std::nullopt;
    return std::make_pair(static_cast<uint32_t>(lo - distinct_.begin()),
                          static_cast<uint32_t>(hi - distinct_.begin()) - 1);
}

std::size_t RangeCounter2D::count_rect(std::size_t x1, std::size_t x2,
                                       uint64_t y1, uint64_t y2) const {
    if (x1 == 0 || x1 > x2 || x2 > wt_.size()) return 0;
    auto yr = dense_range(y1, y2);
    if (!yr) return 0;
    return wt_.range_count(x1, x2, yr->first, yr->second);
}

std::optional<std::size_t> RangeCounter2D::find_any(std::size_t x1,
                                                    std::size_t x2, uint64_t y1,
                                                    uint64_t y2) const {
    if (x1 == 0 || x1 > x2 || x2 > wt_.size()) return std::nullopt;
    auto yr = dense_range(y1, y2);
    if (!yr) return std::nullopt;
    return wt_.find_any(x1, x2, yr->first, yr->second);
}

}  // namespace srcount
