#ifndef SRCOUNT_APPLICATIONS_HPP
#define SRCOUNT_APPLICATIONS_HPP

#include <cstdint>
#include <span>

#include "srcount/src_index.hpp"

namespace srcount {

// The four reductions to substring range counting. Each builder labels the
// text; each query wraps a count over the labeled index. All labels are
// positions or lexicographic ranks in [1, n]; label 0 marks excluded
// positions and is never queried.

// Position-restricted substring counting: occurrences of P starting in [i, j].
SrcIndex prsc_build(std::span<const uint32_t> text, uint32_t sigma);
uint64_t prsc_count(const SrcIndex& idx, std::span<const uint32_t> pattern,
                    uint32_t i, uint32_t j);

// Indexing with intervals: occurrences of P starting in [i, j] and inside
// some interval of pi.
SrcIndex intervals_build(std::span<const uint32_t> text, uint32_t sigma,
                         const IntervalSet& pi);
uint64_t intervals_count(const SrcIndex& idx, std::span<const uint32_t> pattern,
                         uint32_t i, uint32_t j);

// Indexing with gaps: positions where P1 occurs, followed by exactly d
// characters, followed by P2. Position i + d + 1 is labeled with the
// lexicographic rank of the reversed prefix S[1..i] (a suffix of the
// reversed text).
class GappedIndex {
public:
    GappedIndex(std::span<const uint32_t> text, uint32_t sigma, uint32_t d);
    uint64_t count(std::span<const uint32_t> p1,
                   std::span<const uint32_t> p2) const;
    uint32_t gap() const { return d_; }

private:
    uint32_t d_;
    uint32_t sigma_;
    SuffixTree rev_st_;
    SrcIndex idx_;
};

// Aligned pattern matching: positions where P1 occurs in S1 and P2 occurs in
// S2 at the same position. S1[i] is labeled with the rank of the i-th suffix
// of S2. An explicit position map f generalizes "same position" to "P2 at
// f(i)"; f uses 1-based positions with 0 meaning unmapped.
class AlignedIndex {
public:
    AlignedIndex(std::span<const uint32_t> s1, std::span<const uint32_t> s2,
                 uint32_t sigma);
    AlignedIndex(std::span<const uint32_t> s1, std::span<const uint32_t> s2,
                 uint32_t sigma, std::span<const uint32_t> position_map);
    uint64_t count(std::span<const uint32_t> p1,
                   std::span<const uint32_t> p2) const;

private:
    uint32_t sigma_;
    SuffixTree s2_st_;
    SrcIndex idx_;
};

}  // namespace srcount

#endif
