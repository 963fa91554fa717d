#include "srcount/suffix_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "srcount/suffix_array.hpp"

namespace srcount {

SuffixTree::SuffixTree(std::vector<uint32_t> text) : text_(std::move(text)) {
    if (text_.empty()) throw std::invalid_argument("suffix tree: empty text");
    uint32_t sentinel = text_.back();
    for (std::size_t i = 0; i + 1 < text_.size(); ++i)
        if (text_[i] <= sentinel)
            throw std::invalid_argument(
                "suffix tree: sentinel must be unique and minimal");

    std::size_t n = text_.size();
    sa_ = build_suffix_array(text_);
    std::vector<uint32_t> lcp = build_lcp_array(text_, sa_);

    nodes_.reserve(2 * n);
    nodes_.emplace_back();  // root

    // Insert suffixes in lex order, keeping the rightmost path on a stack.
    std::vector<uint32_t> stack = {0};
    for (std::size_t i = 0; i < n; ++i) {
        uint32_t l = (i == 0) ? 0 : lcp[i];
        uint32_t last = kNoNode;
        while (nodes_[stack.back()].string_depth > l) {
            last = stack.back();
            stack.pop_back();
        }
        uint32_t v = stack.back();
        if (nodes_[v].string_depth < l) {
            // Split the incoming edge of `last` at string depth l.
            uint32_t mid = static_cast<uint32_t>(nodes_.size());
            nodes_.emplace_back();
            Node& m = nodes_.back();
            Node& u = nodes_[last];
            uint32_t head = l - nodes_[v].string_depth;
            m.parent = v;
            m.edge_start = u.edge_start;
            m.edge_len = head;
            m.string_depth = l;
            u.edge_start += head;
            u.edge_len -= head;
            u.parent = mid;
            m.children.emplace_back(text_[u.edge_start], last);
            nodes_[v].children.back().second = mid;  // same first character
            stack.push_back(mid);
            v = mid;
        } else if (last != kNoNode) {
            // `last` already attached to v; nothing to fix.
        }
        uint32_t leaf = static_cast<uint32_t>(nodes_.size());
        nodes_.emplace_back();
        Node& lf = nodes_.back();
        lf.parent = v;
        lf.edge_start = sa_[i] + l;
        lf.edge_len = static_cast<uint32_t>(n) - sa_[i] - l;
        lf.string_depth = static_cast<uint32_t>(n) - sa_[i];
        lf.lo = lf.hi = static_cast<uint32_t>(i) + 1;
        nodes_[v].children.emplace_back(text_[sa_[i] + l], leaf);
        stack.push_back(leaf);
    }

    // Suffix intervals for internal nodes, bottom-up.
    std::vector<std::pair<uint32_t, bool>> dfs = {{0, false}};
    while (!dfs.empty()) {
        auto [v, expanded] = dfs.back();
        dfs.pop_back();
        Node& nd = nodes_[v];
        if (nd.children.empty()) continue;
        if (expanded) {
            nd.lo = nodes_[nd.children.front().second].lo;
            nd.hi = nodes_[nd.children.back().second].hi;
        } else {
            dfs.push_back({v, true});
            for (auto& [c, u] : nd.children) dfs.push_back({u, false});
        }
    }
}

std::optional<uint32_t> SuffixTree::child(uint32_t v, uint32_t c) const {
    const auto& ch = nodes_[v].children;
    auto it = std::lower_bound(
        ch.begin(), ch.end(), c,
        [](const std::pair<uint32_t, uint32_t>& e, uint32_t key) {
            return e.first < key;
        });
    if (it == ch.end() || it->first != c) return std::nullopt;
    return it->second;
}

LocusResult SuffixTree::locus(std::span<const uint32_t> pattern) const {
    if (pattern.empty()) throw std::invalid_argument("locus: empty pattern");
    LocusResult res;
    uint32_t v = 0;
    std::size_t d = 0;
    while (d < pattern.size()) {
        auto next = child(v, pattern[d]);
        if (!next) return res;
        const Node& nd = nodes_[*next];
        uint32_t take = static_cast<uint32_t>(
            std::min<std::size_t>(nd.edge_len, pattern.size() - d));
        for (uint32_t k = 1; k < take; ++k)
            if (text_[nd.edge_start + k] != pattern[d + k]) return res;
        res.path.emplace_back(*next, take);
        v = *next;
        d += take;
    }
    res.matched = true;
    res.locus_node = v;
    return res;
}

}  // namespace srcount
