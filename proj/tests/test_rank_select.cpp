#include <doctest.h>

#include <random>

#include "srcount/wavelet_tree.hpp"
#include "test_util.hpp"

using srcount::WaveletTree;
using test_util::tseq;

namespace {

// Naive array oracle.
std::size_t naive_rank(const std::vector<uint32_t>& s, uint32_t c, std::size_t i) {
    std::size_t r = 0;
    for (std::size_t k = 0; k < i; ++k) r += s[k] == c;
    return r;
}

std::size_t naive_select(const std::vector<uint32_t>& s, uint32_t c, std::size_t j) {
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k] == c && --j == 0) return k + 1;
    return 0;
}

}  // namespace

TEST_CASE("build and basic queries on the root-string example") {
    auto seq = tseq("dbarabacaar");
    WaveletTree wt(seq, 27);
    CHECK(wt.size() == 11);

    // [2,6] covers the first and second occurrences of 'a'
    CHECK(wt.rank('a' - 'a' + 1, 6) == 2);
    CHECK(wt.rank('a' - 'a' + 1, 0) == 0);
    CHECK(wt.rank('b' - 'a' + 1, 11) == 2);

    CHECK(wt.select('a' - 'a' + 1, 1) == 3);
    CHECK(wt.select('a' - 'a' + 1, 2) == 5);

    CHECK(wt.access(1) == 'd' - 'a' + 1);
    CHECK(wt.access(11) == 'r' - 'a' + 1);
}

TEST_CASE("degenerate shapes") {
    WaveletTree empty({}, 4);
    CHECK(empty.size() == 0);
    CHECK(empty.rank(2, 0) == 0);

    WaveletTree unary({0, 0, 0, 0}, 1);
    CHECK(unary.rank(0, 4) == 4);
    CHECK(unary.select(0, 3) == 3);
    CHECK(unary.access(1) == 0);

    WaveletTree single({5}, 8);
    CHECK(single.access(1) == 5);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(WaveletTree({4}, 4), std::invalid_argument);
    WaveletTree wt({1, 2, 1}, 4);
    CHECK_THROWS_AS(wt.rank(1, 9), std::invalid_argument);
    CHECK_THROWS_AS(wt.access(0), std::invalid_argument);
    CHECK_THROWS_AS(wt.access(4), std::invalid_argument);
    CHECK_THROWS_AS(wt.select(1, 3), std::out_of_range);
    CHECK_THROWS_AS(wt.select(3, 1), std::out_of_range);
}

TEST_CASE("rank/select/access agree with the naive oracle") {
    std::mt19937 rng(11);
    for (uint32_t sigma : {2u, 4u, 16u, 64u}) {
        std::size_t n = 1 + rng() % 10000;
        std::vector<uint32_t> s = test_util::random_text(rng, n, sigma);
        WaveletTree wt(s, sigma);
        std::uniform_int_distribution<std::size_t> pos(0, n);
        std::uniform_int_distribution<uint32_t> sym(0, sigma - 1);
        for (int q = 0; q < 25000; ++q) {
            uint32_t c = sym(rng);
            std::size_t i = pos(rng);
            std::size_t r = wt.rank(c, i);
            CHECK(r == naive_rank(s, c, i));
            if (i >= 1) CHECK(wt.access(i) == s[i - 1]);
            std::size_t total = wt.rank(c, n);
            if (total > 0) {
                std::size_t j = 1 + rng() % total;
                std::size_t p = wt.select(c, j);
                CHECK(p == naive_select(s, c, j));
                // duality
                CHECK(wt.rank(c, p) == j);
                CHECK(p >= j);
            }
        }
        // total ranks sum to n
        std::size_t sum = 0;
        for (uint32_t c = 0; c < sigma; ++c) sum += wt.rank(c, n);
        CHECK(sum == n);
    }
}
