#ifndef SRCOUNT_NODE_STRINGS_HPP
#define SRCOUNT_NODE_STRINGS_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "srcount/suffix_tree.hpp"
#include "srcount/wavelet_tree.hpp"

namespace srcount {

// Rank/select strings stored at the top-tree nodes: the root holds the
// characters of S sorted by label; each stored child holds the characters
// following the matched occurrences, in the same label order.
struct TopTreeStrings {
    uint32_t tau = 1;
    // 1-based position in S of each root-string entry.
    std::vector<uint32_t> root_positions;
    std::unordered_map<uint32_t, WaveletTree> per_node;

    const WaveletTree* node_string(uint32_t v) const {
        auto it = per_node.find(v);
        return it == per_node.end() ? nullptr : &it->second;
    }
};

// String-depth cutoff: ~ log n / log log n, pinned to 1 for tiny inputs.
uint32_t default_tau(std::size_t n);

// tseq is the sentinel-terminated sequence (length n + 1, sentinel code 0);
// labels has length n. Returns the label-sorted characters and their 1-based
// positions in S; ties broken by position (stable).
std::pair<std::vector<uint32_t>, std::vector<uint32_t>> build_root_string(
    std::span<const uint32_t> tseq, std::span<const uint64_t> labels);

// Keep the occurrences of c in the parent string and replace each by the
// character `skip` positions later in S (the sentinel when that position is
// n + 1). Positions are 1-based into tseq.
std::pair<std::vector<uint32_t>, std::vector<uint32_t>> derive_child_string(
    std::span<const uint32_t> tseq, std::span<const uint32_t> parent_seq,
    std::span<const uint32_t> parent_positions, uint32_t c, uint32_t skip);

// Builds rank/select structures for the root and every node with string
// depth < tau reachable from a stored parent. Position arrays are transient
// except for the root's. alphabet_size counts the sentinel code.
TopTreeStrings build_top_tree_strings(std::span<const uint32_t> tseq,
                                      std::span<const uint64_t> labels,
                                      const SuffixTree& st, uint32_t tau,
                                      uint32_t alphabet_size);

}  // namespace srcount

#endif
