#ifndef SRCOUNT_SUFFIX_ARRAY_HPP
#define SRCOUNT_SUFFIX_ARRAY_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace srcount {

// Prefix-doubling suffix array construction, O(n log n). The input must end
// with a unique minimal sentinel symbol.
std::vector<uint32_t> build_suffix_array(std::span<const uint32_t> text);

// Kasai's algorithm. lcp[i] is the longest common prefix of the suffixes with
// ranks i-1 and i (0-based ranks); lcp[0] = 0.
std::vector<uint32_t> build_lcp_array(std::span<const uint32_t> text,
                                      std::span<const uint32_t> sa);

}  // namespace srcount

#endif
