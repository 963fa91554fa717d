#include <doctest.h>

#include <map>
#include <random>

#include "srcount/node_strings.hpp"
#include "srcount/suffix_tree.hpp"
#include "test_util.hpp"

using namespace srcount;
using test_util::from_tseq;
using test_util::tseq;

namespace {

std::vector<uint32_t> paper_tseq() { return tseq("abracadabra$"); }
std::vector<uint64_t> paper_labels() {
    return {41, 23, 93, 66, 53, 33, 2, 24, 37, 29, 62};
}

std::vector<uint32_t> node_str(const SuffixTree& st, uint32_t v) {
    std::vector<uint32_t> out, chain;
    while (v != st.root()) {
        chain.push_back(v);
        v = st.parent(v);
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        for (uint32_t k = 0; k < st.edge_len(*it); ++k)
            out.push_back(st.text()[st.edge_start(*it) + k]);
    return out;
}

std::vector<uint32_t> wt_to_seq(const WaveletTree& wt) {
    std::vector<uint32_t> out;
    for (std::size_t i = 1; i <= wt.size(); ++i) out.push_back(wt.access(i));
    return out;
}

}  // namespace

TEST_CASE("root string of the worked example") {
    auto [seq, pos] = build_root_string(paper_tseq(), paper_labels());
    CHECK(from_tseq(seq) == "dbarabacaar");
    CHECK(pos == std::vector<uint32_t>{7, 2, 8, 10, 6, 9, 1, 5, 11, 4, 3});
}

TEST_CASE("equal labels keep text order; single character is itself") {
    std::vector<uint64_t> flat(11, 5);
    auto [seq, pos] = build_root_string(paper_tseq(), flat);
    CHECK(from_tseq(seq) == "abracadabra");

    std::vector<uint64_t> one{3};
    auto [s1, p1] = build_root_string(tseq("x$"), one);
    CHECK(from_tseq(s1) == "x");
    CHECK(p1 == std::vector<uint32_t>{1});
}

TEST_CASE("child string derivation from the worked example") {
    auto T = paper_tseq();
    auto [root_seq, root_pos] = build_root_string(T, paper_labels());

    auto [a_seq, a_pos] = derive_child_string(T, root_seq, root_pos, 1, 1);
    CHECK(from_tseq(a_seq) == "bdb$c");
    CHECK(a_pos == std::vector<uint32_t>{9, 7, 2, 12, 5});

    // Edge "bra": replace the two b's by the characters 3 positions later.
    auto [b_seq, b_pos] = derive_child_string(T, root_seq, root_pos, 2, 3);
    CHECK(from_tseq(b_seq) == "c$");

    auto [z_seq, z_pos] =
        derive_child_string(T, root_seq, root_pos, 'z' - 'a' + 1, 1);
    CHECK(z_seq.empty());
}

TEST_CASE("top tree strings of the worked example") {
    auto T = paper_tseq();
    SuffixTree st(T);
    auto tts = build_top_tree_strings(T, paper_labels(), st, 2, 27);

    auto a_node = st.child(st.root(), 1);
    REQUIRE(a_node);
    const WaveletTree* sv = tts.node_string(*a_node);
    REQUIRE(sv);
    CHECK(from_tseq(wt_to_seq(*sv)) == "bdb$c");
}

TEST_CASE("tau = 1 stores only the root string") {
    auto T = paper_tseq();
    SuffixTree st(T);
    auto tts = build_top_tree_strings(T, paper_labels(), st, 1, 27);
    CHECK(tts.per_node.size() == 1);
    CHECK(tts.node_string(st.root()) != nullptr);

    SuffixTree tiny(tseq("a$"));
    std::vector<uint64_t> zero{0};
    auto tts1 = build_top_tree_strings(tseq("a$"), zero, tiny, 1, 27);
    CHECK(tts1.node_string(tiny.root())->size() == 1);
}

TEST_CASE("default tau policy") {
    CHECK(default_tau(1) == 1);
    CHECK(default_tau(4) == 1);
    CHECK(default_tau(11) == 2);
    CHECK(default_tau(10000) >= 2);
}

TEST_CASE("multiset, order, and space properties on random texts") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 25; ++iter) {
        std::size_t n = 1 + rng() % 511;
        uint32_t sigma = iter % 2 == 0 ? 3 : 5;
        auto text = test_util::random_text(rng, n, sigma);
        auto labels = test_util::random_labels(rng, n, iter % 3 == 0 ? 7 : n);
        std::vector<uint32_t> T(text);
        for (auto& c : T) ++c;
        T.push_back(0);
        SuffixTree st(T);
        uint32_t tau = default_tau(n);
        auto tts = build_top_tree_strings(T, labels, st, tau, sigma + 2);

        // label-sorted occurrence order, recomputed naively
        auto order_of = [&](const std::vector<uint32_t>& str) {
            std::vector<std::pair<uint64_t, uint32_t>> occ;  // (label, pos)
            for (std::size_t i = 0; i < n && i + str.size() <= n; ++i)
                if (std::equal(str.begin(), str.end(), T.begin() + i))
                    occ.emplace_back(labels[i], static_cast<uint32_t>(i));
            std::stable_sort(occ.begin(), occ.end(),
                             [](auto& x, auto& y) { return x.first < y.first; });
            return occ;
        };

        std::map<uint32_t, std::size_t> depth_totals;  // tree depth -> chars
        for (const auto& [v, wt] : tts.per_node) {
            auto str = node_str(st, v);
            auto occ = order_of(str);
            REQUIRE(wt.size() == occ.size());
            for (std::size_t j = 0; j < occ.size(); ++j) {
                uint32_t next_pos = occ[j].second + static_cast<uint32_t>(str.size());
                uint32_t expect = next_pos < T.size() ? T[next_pos] : 0;
                CHECK(wt.access(j + 1) == expect);
            }
            uint32_t depth = 0;
            for (uint32_t u = v; u != st.root(); u = st.parent(u)) ++depth;
            depth_totals[depth] += wt.size();
        }
        for (auto [d, total] : depth_totals) CHECK(total <= n + 1);
    }
}
