#ifndef SRCOUNT_ORACLE_HPP
#define SRCOUNT_ORACLE_HPP

#include <cstdint>
#include <span>

#include "srcount/labeled_text.hpp"

namespace srcount::oracle {

// Brute-force reference implementations. Deliberately share no code with the
// index; every counting path is validated against these.

uint64_t naive_count(const LabeledText& lt, std::span<const uint32_t> pattern,
                     uint64_t a, uint64_t b);

uint64_t naive_prsc(std::span<const uint32_t> text,
                    std::span<const uint32_t> pattern, uint32_t i, uint32_t j);

uint64_t naive_intervals(std::span<const uint32_t> text, const IntervalSet& pi,
                         std::span<const uint32_t> pattern, uint32_t i,
                         uint32_t j);

uint64_t naive_gaps(std::span<const uint32_t> text, uint32_t d,
                    std::span<const uint32_t> p1, std::span<const uint32_t> p2);

uint64_t naive_aligned(std::span<const uint32_t> s1,
                       std::span<const uint32_t> s2,
                       std::span<const uint32_t> p1,
                       std::span<const uint32_t> p2);

}  // namespace srcount::oracle

#endif
