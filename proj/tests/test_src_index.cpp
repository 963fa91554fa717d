#include <doctest.h>

#include <random>
#include <thread>

#include "srcount/oracle.hpp"
#include "srcount/src_index.hpp"
#include "test_util.hpp"

using namespace srcount;
using test_util::codes;

TEST_CASE("worked-example queries") {
    SrcIndex idx(test_util::paper_instance());
    CHECK(idx.tau() == 2);

    CHECK(idx.count(codes("ab"), 20, 40) == 1);
    CHECK(idx.count(codes("ab"), 0, 93) == 2);
    CHECK(idx.count(codes("zz"), 0, 93) == 0);
    // m = 11 > tau exercises the fallback path
    CHECK(idx.count(codes("abracadabra"), 0, 93) == 1);

    CHECK(!idx.is_empty(codes("ab"), 20, 40));
    CHECK(idx.is_empty(codes("ab"), 90, 93));
    CHECK(idx.is_empty(codes("zz"), 0, 93));
}

TEST_CASE("worked-example report_one") {
    SrcIndex idx(test_util::paper_instance());
    auto p = idx.report_one(codes("ab"), 20, 40);
    REQUIRE(p);
    CHECK(*p == 8);

    auto any = idx.report_one(codes("ab"), 0, 93);
    REQUIRE(any);
    CHECK((*any == 1 || *any == 8));

    CHECK(!idx.report_one(codes("zz"), 0, 93));
    // long path
    auto lp = idx.report_one(codes("abracadabra"), 0, 93);
    REQUIRE(lp);
    CHECK(*lp == 1);
}

TEST_CASE("build validation and tiny inputs") {
    LabeledText bad;
    bad.sigma = 2;
    CHECK_THROWS_AS(SrcIndex{bad}, std::invalid_argument);

    LabeledText mismatched;
    mismatched.text = {0, 1};
    mismatched.labels = {1};
    mismatched.sigma = 2;
    mismatched.universe = 1;
    CHECK_THROWS_AS(SrcIndex{mismatched}, std::invalid_argument);

    LabeledText single;
    single.text = {0};
    single.labels = {7};
    single.sigma = 1;
    single.universe = 10;
    SrcIndex idx(single);
    CHECK(idx.count(std::vector<uint32_t>{0}, 0, 10) == 1);

    LabeledText unary;
    unary.text = {0, 0, 0, 0};
    unary.labels = {1, 2, 3, 4};
    unary.sigma = 1;
    unary.universe = 4;
    SrcIndex uidx(unary);
    CHECK(uidx.count(std::vector<uint32_t>{0, 0}, 0, 4) == 3);
    CHECK(uidx.count(std::vector<uint32_t>{0, 0}, 2, 4) == 2);
}

TEST_CASE("query edge cases") {
    SrcIndex idx(test_util::paper_instance());
    CHECK_THROWS_AS(idx.count({}, 0, 93), std::invalid_argument);
    CHECK(idx.count(codes("ab"), 40, 20) == 0);
    CHECK(idx.count(codes("ab"), 95, 99) == 0);
}

TEST_CASE("build-time self-test runs clean on the worked example") {
    BuildConfig cfg;
    cfg.self_test = true;
    SrcIndex idx(test_util::paper_instance(), cfg);
    CHECK(idx.count(codes("ab"), 20, 40) == 1);
}

TEST_CASE("oracle equivalence, path agreement, and label additivity") {
    std::mt19937 rng(57);
    int total_queries = 0;
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t n = 1 + rng() % 600;
        uint32_t sigma = std::vector<uint32_t>{2, 4, 16}[iter % 3];
        uint64_t u = iter % 2 == 0 ? n : (uint64_t{1} << 40);
        LabeledText lt;
        lt.text = test_util::random_text(rng, n, sigma);
        lt.labels = test_util::random_labels(rng, n, u);
        lt.sigma = sigma;
        lt.universe = u;
        SrcIndex idx(lt);
        uint32_t tau = idx.tau();

        std::uniform_int_distribution<uint64_t> lab(0, u);
        for (int q = 0; q < 60; ++q, ++total_queries) {
            std::size_t m = 1 + rng() % (2 * tau + 4);
            std::vector<uint32_t> pat;
            if (q % 3 == 0 && m <= n) {
                // sample a genuine substring so positives are frequent
                std::size_t start = rng() % (n - m + 1);
                pat.assign(lt.text.begin() + start, lt.text.begin() + start + m);
            } else {
                pat = test_util::random_text(rng, m, sigma);
            }
            uint64_t a = lab(rng), b = lab(rng);
            if (a > b) std::swap(a, b);

            QueryStats stats;
            uint64_t got = idx.count(pat, a, b, &stats);
            CHECK(got == oracle::naive_count(lt, pat, a, b));

            // forced fallback agrees with the descent
            CHECK(idx.count_long_path(pat, a, b) == got);

            // work bound: at most 2 rank queries per pattern character
            if (!stats.used_long_path) CHECK(stats.rank_calls <= 2 * m);

            // additivity and extension monotonicity
            if (a >= 1)
                CHECK(idx.count(pat, 0, b) - idx.count(pat, 0, a - 1) == got);
            std::vector<uint32_t> ext(pat);
            ext.push_back(rng() % sigma);
            CHECK(idx.count(ext, a, b) <= got);

            auto rep = idx.report_one(pat, a, b);
            CHECK(rep.has_value() == (got > 0));
            if (rep) {
                uint32_t p = *rep;
                REQUIRE(p >= 1);
                REQUIRE(p + m - 1 <= n);
                CHECK(std::equal(pat.begin(), pat.end(), lt.text.begin() + p - 1));
                CHECK(lt.labels[p - 1] >= a);
                CHECK(lt.labels[p - 1] <= b);
            }
        }
    }
    CHECK(total_queries == 30 * 60);
}

TEST_CASE("concurrent readers see consistent results") {
    std::mt19937 rng(91);
    LabeledText lt;
    lt.text = test_util::random_text(rng, 400, 4);
    lt.labels = test_util::random_labels(rng, 400, 400);
    lt.sigma = 4;
    lt.universe = 400;
    SrcIndex idx(lt);

    auto expected = idx.count(codes("ab"), 0, 400);
    std::vector<std::thread> threads;
    std::vector<uint64_t> results(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] {
            uint64_t acc = 0;
            for (int k = 0; k < 500; ++k) acc = idx.count(codes("ab"), 0, 400);
            results[t] = acc;
        });
    for (auto& th : threads) th.join();
    for (uint64_t r : results) CHECK(r == expected);
}
