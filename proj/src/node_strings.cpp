#include "srcount/node_strings.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace srcount {

uint32_t default_tau(std::size_t n) {
    if (n <= 4) return 1;
    double lg = std::log2(static_cast<double>(n));
    double lglg = std::max(1.0, std::log2(lg));
    return std::max<uint32_t>(1, static_cast<uint32_t>(std::ceil(lg / lglg)));
}

std::pair<std::vector<uint32_t>, std::vector<uint32_t>> build_root_string(
    std::span<const uint32_t> tseq, std::span<const uint64_t> labels) {
    std::size_t n = labels.size();
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](uint32_t a, uint32_t b) { return labels[a] < labels[b]; });
    std::vector<uint32_t> seq(n), pos(n);
    for (std::size_t j = 0; j < n; ++j) {
        seq[j] = tseq[order[j]];
        pos[j] = order[j] + 1;
    }
    return {std::move(seq), std::move(pos)};
}

std::pair<std::vector<uint32_t>, std::vector<uint32_t>> derive_child_string(
    std::span<const uint32_t> tseq, std::span<const uint32_t> parent_seq,
    std::span<const uint32_t> parent_positions, uint32_t c, uint32_t skip) {
    std::vector<uint32_t> seq, pos;
    for (std::size_t j = 0; j < parent_seq.size(); ++j) {
        if (parent_seq[j] != c) continue;
        uint32_t p = parent_positions[j] + skip;  // <= n + 1 by the edge label
        seq.push_back(tseq[p - 1]);
        pos.push_back(p);
    }
    return {std::move(seq), std::move(pos)};
}

TopTreeStrings build_top_tree_strings(std::span<const uint32_t> tseq,
                                      std::span<const uint64_t> labels,
                                      const SuffixTree& st, uint32_t tau,
                                      uint32_t alphabet_size) {
    TopTreeStrings tts;
    tts.tau = tau;
    auto [root_seq, root_pos] = build_root_string(tseq, labels);
    tts.root_positions = root_pos;

    struct Pending {
        uint32_t node;
        std::vector<uint32_t> seq, pos;
    };
    std::deque<Pending> queue;
    queue.push_back({st.root(), std::move(root_seq), std::move(root_pos)});

    while (!queue.empty()) {
        Pending cur = std::move(queue.front());
        queue.pop_front();
        for (auto [c, v] : st.children(cur.node)) {
            if (c == 0) continue;  // sentinel edge, unreachable by patterns
            if (st.string_depth(v) >= tau) continue;
            auto [seq, pos] =
                derive_child_string(tseq, cur.seq, cur.pos, c, st.edge_len(v));
            queue.push_back({v, std::move(seq), std::move(pos)});
        }
        tts.per_node.emplace(cur.node,
                             WaveletTree(std::move(cur.seq), alphabet_size));
    }
    return tts;
}

}  // namespace srcount
