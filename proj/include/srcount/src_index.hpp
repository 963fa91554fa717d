#ifndef SRCOUNT_SRC_INDEX_HPP
#define SRCOUNT_SRC_INDEX_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "srcount/label_index.hpp"
#include "srcount/labeled_text.hpp"
#include "srcount/node_strings.hpp"
#include "srcount/range2d.hpp"
#include "srcount/suffix_tree.hpp"

namespace srcount {

struct BuildConfig {
    std::optional<uint32_t> tau;
    // Cross-checks a sample of queries against the brute-force oracle at
    // build time.
    bool self_test = false;
};

struct QueryStats {
    std::size_t rank_calls = 0;
    bool used_long_path = false;
};

// Substring range counting index: given a pattern P and a label interval
// [a, b], counts the occurrences of P whose first character's label lies in
// [a, b]. Patterns of length <= tau descend through the node strings; longer
// patterns fall back to the suffix tree plus 2D rectangle counting.
// Immutable after construction; safe for concurrent readers.
class SrcIndex {
public:
    explicit SrcIndex(LabeledText lt, BuildConfig cfg = {});

    uint64_t count(std::span<const uint32_t> pattern, uint64_t a, uint64_t b,
                   QueryStats* stats = nullptr) const;

    bool is_empty(std::span<const uint32_t> pattern, uint64_t a,
                  uint64_t b) const {
        return count(pattern, a, b) == 0;
    }

    // 1-based position in S of some qualifying occurrence, if any.
    std::optional<uint32_t> report_one(std::span<const uint32_t> pattern,
                                       uint64_t a, uint64_t b) const;

    // Forces the locus + rectangle-count route regardless of pattern length.
    uint64_t count_long_path(std::span<const uint32_t> pattern, uint64_t a,
                             uint64_t b) const;

    uint32_t tau() const { return tts_.tau; }
    std::size_t size() const { return lt_.text.size(); }
    const LabeledText& labeled_text() const { return lt_; }
    const SuffixTree& suffix_tree() const { return st_; }
    const TopTreeStrings& top_strings() const { return tts_; }
    const LabelIndex& label_index() const { return li_; }

private:
    struct DescentStep {
        const WaveletTree* parent_string;
        uint32_t c;
    };

    // Shifted pattern (sentinel code 0 reserved); nullopt if a character
    // cannot occur in the text.
    std::optional<std::vector<uint32_t>> encode(
        std::span<const uint32_t> pattern) const;

    uint64_t count_short(std::span<const uint32_t> enc, uint64_t a, uint64_t b,
                         QueryStats* stats, std::vector<DescentStep>* steps,
                         uint64_t* first_entry) const;
    uint64_t count_long(std::span<const uint32_t> enc, uint64_t a, uint64_t b,
                        std::optional<uint32_t>* one_pos) const;

    LabeledText lt_;
    SuffixTree st_;
    TopTreeStrings tts_;
    LabelIndex li_;
    RangeCounter2D rc_;
};

}  // namespace srcount

#endif
