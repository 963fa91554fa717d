#ifndef SRCOUNT_SUFFIX_TREE_HPP
#define SRCOUNT_SUFFIX_TREE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace srcount {

struct LocusResult {
    bool matched = false;
    // (child node id, edge characters consumed) for every edge traversed.
    std::vector<std::pair<uint32_t, uint32_t>> path;
    uint32_t locus_node = 0;
};

// Compacted suffix trie over a sentinel-terminated sequence, built from the
// suffix array and LCP array by inserting suffixes in lexicographic order.
// Immutable after construction. Ranks are 1-based.
class SuffixTree {
public:
    static constexpr uint32_t kNoNode = UINT32_MAX;

    // text must end with a unique symbol strictly smaller than all others.
    explicit SuffixTree(std::vector<uint32_t> text);

    uint32_t root() const { return 0; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t text_size() const { return text_.size(); }
    const std::vector<uint32_t>& text() const { return text_; }

    std::optional<uint32_t> child(uint32_t v, uint32_t c) const;
    LocusResult locus(std::span<const uint32_t> pattern) const;
    std::pair<uint32_t, uint32_t> suffix_interval(uint32_t v) const {
        return {nodes_[v].lo, nodes_[v].hi};
    }
    uint32_t string_depth(uint32_t v) const { return nodes_[v].string_depth; }
    uint32_t parent(uint32_t v) const { return nodes_[v].parent; }
    uint32_t edge_start(uint32_t v) const { return nodes_[v].edge_start; }
    uint32_t edge_len(uint32_t v) const { return nodes_[v].edge_len; }
    std::span<const std::pair<uint32_t, uint32_t>> children(uint32_t v) const {
        return nodes_[v].children;
    }

    // 1-based start position of the suffix with 1-based lexicographic rank r.
    uint32_t suffix_position(uint32_t r) const { return sa_[r - 1] + 1; }

private:
    struct Node {
        uint32_t parent = kNoNode;
        uint32_t edge_start = 0;
        uint32_t edge_len = 0;
        uint32_t string_depth = 0;
        uint32_t lo = 0, hi = 0;  // 1-based suffix rank interval
        std::vector<std::pair<uint32_t, uint32_t>> children;  // (first char, id)
    };

    std::vector<uint32_t> text_;
    std::vector<uint32_t> sa_;
    std::vector<Node> nodes_;
};

}  // namespace srcount

#endif
