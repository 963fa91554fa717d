#include "srcount/oracle.hpp"

#include <stdexcept>

namespace srcount::oracle {

namespace {

bool occurs_at(std::span<const uint32_t> text, std::span<const uint32_t> pattern,
               std::size_t pos) {
    if (pos + pattern.size() > text.size()) return false;
    for (std::size_t k = 0; k < pattern.size(); ++k)
        if (text[pos + k] != pattern[k]) return false;
    return true;
}

}  // namespace

uint64_t naive_count(const LabeledText& lt, std::span<const uint32_t> pattern,
                     uint64_t a, uint64_t b) {
    if (pattern.empty()) throw std::invalid_argument("naive_count: empty pattern");
    if (a > b) return 0;
    uint64_t count = 0;
    for (std::size_t i = 0; i < lt.text.size(); ++i)
        if (lt.labels[i] >= a && lt.labels[i] <= b && occurs_at(lt.text, pattern, i))
            ++count;
    return count;
}

uint64_t naive_prsc(std::span<const uint32_t> text,
                    std::span<const uint32_t> pattern, uint32_t i, uint32_t j) {
    uint64_t count = 0;
    for (uint32_t p = i; p <= j && p >= 1; ++p)
        if (occurs_at(text, pattern, p - 1)) ++count;
    return count;
}

uint64_t naive_intervals(std::span<const uint32_t> text, const IntervalSet& pi,
                         std::span<const uint32_t> pattern, uint32_t i,
                         uint32_t j) {
    uint64_t count = 0;
    for (uint32_t p = i; p <= j && p >= 1; ++p) {
        if (!occurs_at(text, pattern, p - 1)) continue;
        for (auto [s, e] : pi.intervals)
            if (s <= p && p <= e) {
                ++count;
                break;
            }
    }
    return count;
}

uint64_t naive_gaps(std::span<const uint32_t> text, uint32_t d,
                    std::span<const uint32_t> p1, std::span<const uint32_t> p2) {
    uint64_t count = 0;
    for (std::size_t p = 0; p < text.size(); ++p)
        if (occurs_at(text, p1, p) && occurs_at(text, p2, p + p1.size() + d))
            ++count;
    return count;
}

uint64_t naive_aligned(std::span<const uint32_t> s1, std::span<const uint32_t> s2,
                       std::span<const uint32_t> p1, std::span<const uint32_t> p2) {
    uint64_t count = 0;
    for (std::size_t p = 0; p < s1.size(); ++p)
        if (occurs_at(s1, p1, p) && occurs_at(s2, p2, p)) ++count;
    return count;
}

}  // namespace srcount::oracle
