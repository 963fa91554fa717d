#ifndef SRCOUNT_LABELED_TEXT_HPP
#define SRCOUNT_LABELED_TEXT_HPP

#include <cstdint>
#include <vector>

namespace srcount {

// A string over a dense alphabet [0, sigma) with one integer label in
// [0, universe] per position.
struct LabeledText {
    std::vector<uint32_t> text;
    std::vector<uint64_t> labels;
    uint64_t universe = 0;
    uint32_t sigma = 0;
};

struct IntervalSet {
    // 1-based inclusive (start, end) pairs within [1, n].
    std::vector<std::pair<uint32_t, uint32_t>> intervals;
};

}  // namespace srcount

#endif
