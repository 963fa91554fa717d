#include "srcount/src_index.hpp"

#include <random>
#include <stdexcept>

#include "srcount/oracle.hpp"

namespace srcount {

namespace {

std::vector<uint32_t> shifted_with_sentinel(const LabeledText& lt) {
    if (lt.text.empty()) throw std::invalid_argument("build: empty text");
    if (lt.sigma == 0) throw std::invalid_argument("build: alphabet size 0");
    if (lt.labels.size() != lt.text.size())
        throw std::invalid_argument("build: label count != text length");
    std::vector<uint32_t> tseq;
    tseq.reserve(lt.text.size() + 1);
    for (uint32_t c : lt.text) {
        if (c >= lt.sigma)
            throw std::invalid_argument("build: character out of alphabet");
        tseq.push_back(c + 1);
    }
    tseq.push_back(0);  // sentinel
    return tseq;
}

}  // namespace

SrcIndex::SrcIndex(LabeledText lt, BuildConfig cfg)
    : lt_(std::move(lt)), st_(shifted_with_sentinel(lt_)) {
    std::size_t n = lt_.text.size();
    uint32_t tau = cfg.tau ? std::max<uint32_t>(1, *cfg.tau) : default_tau(n);
    li_ = LabelIndex(lt_.labels, lt_.universe);
    tts_ = build_top_tree_strings(st_.text(), lt_.labels, st_, tau,
                                  lt_.sigma + 1);

    // One point per proper suffix, ordered by lex rank; the sentinel-only
    // suffix (rank 1) carries no label and is excluded.
    std::vector<uint64_t> ys(n);
    for (std::size_t r = 2; r <= n + 1; ++r)
        ys[r - 2] = lt_.labels[st_.suffix_position(static_cast<uint32_t>(r)) - 1];
    rc_ = RangeCounter2D(ys);

    if (cfg.self_test) {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<std::size_t> pos_dist(0, n - 1);
        std::uniform_int_distribution<uint64_t> lab_dist(0, lt_.universe);
        for (int q = 0; q < 64; ++q) {
            std::size_t start = pos_dist(rng);
            std::size_t max_len = std::min<std::size_t>(n - start, tau + 3);
            std::size_t len = 1 + rng() % max_len;
            std::span<const uint32_t> pat(lt_.text.data() + start, len);
            uint64_t a = lab_dist(rng), b = lab_dist(rng);
            if (a > b) std::swap(a, b);
            if (count(pat, a, b) != oracle::naive_count(lt_, pat, a, b))
                throw std::logic_error("build self-test: oracle mismatch");
        }
    }
}

std::optional<std::vector<uint32_t>> SrcIndex::encode(
    std::span<const uint32_t> pattern) const {
    std::vector<uint32_t> enc;
    enc.reserve(pattern.size());
    for (uint32_t c : pattern) {
        if (c >= lt_.sigma) return std::nullopt;
        enc.push_back(c + 1);
    }
    return enc;
}

uint64_t SrcIndex::count_short(std::span<const uint32_t> enc, uint64_t a,
                               uint64_t b, QueryStats* stats,
                               std::vector<DescentStep>* steps,
                               uint64_t* first_entry) const {
    auto interval = li_.label_interval(a, b);
    if (!interval) return 0;
    auto [lo, hi] = *interval;

    const auto& text = st_.text();
    uint32_t v = st_.root();
    std::size_t d = 0, m = enc.size();
    while (d < m) {
        uint32_t c = enc[d];
        auto next = st_.child(v, c);
        if (!next) return 0;
        uint32_t e = st_.edge_len(*next);
        uint32_t take =
            static_cast<uint32_t>(std::min<std::size_t>(e, m - d));
        uint32_t start = st_.edge_start(*next);
        for (uint32_t k = 1; k < take; ++k)
            if (text[start + k] != enc[d + k]) return 0;

        const WaveletTree* sv = tts_.node_string(v);
        uint64_t nlo = sv->rank(c, lo - 1) + 1;
        uint64_t nhi = sv->rank(c, hi);
        if (stats) stats->rank_calls += 2;
        if (nlo > nhi) return 0;
        if (steps) steps->push_back({sv, c});

        if (d + take == m) {
            if (first_entry) *first_entry = nlo;
            return nhi - nlo + 1;
        }
        v = *next;
        d += e;
        lo = nlo;
        hi = nhi;
    }
    return 0;  // unreachable: m >= 1
}

uint64_t SrcIndex::count_long(std::span<const uint32_t> enc, uint64_t a,
                              uint64_t b,
                              std::optional<uint32_t>* one_pos) const {
    LocusResult loc = st_.locus(enc);
    if (!loc.matched) return 0;
    auto [xl, xh] = st_.suffix_interval(loc.locus_node);
    // Shift out the sentinel suffix at rank 1.
    uint64_t c = rc_.count_rect(xl - 1, xh - 1, a, b);
    if (one_pos && c > 0) {
        auto x = rc_.find_any(xl - 1, xh - 1, a, b);
        *one_pos = st_.suffix_position(static_cast<uint32_t>(*x) + 1);
    }
    return c;
}

uint64_t SrcIndex::count(std::span<const uint32_t> pattern, uint64_t a,
                         uint64_t b, QueryStats* stats) const {
    if (pattern.empty()) throw std::invalid_argument("count: empty pattern");
    if (a > b) return 0;
    if (a > lt_.universe) return 0;
    b = std::min(b, lt_.universe);
    auto enc = encode(pattern);
    if (!enc) return 0;
    if (enc->size() <= tts_.tau)
        return count_short(*enc, a, b, stats, nullptr, nullptr);
    if (stats) stats->used_long_path = true;
    return count_long(*enc, a, b, nullptr);
}

uint64_t SrcIndex::count_long_path(std::span<const uint32_t> pattern, uint64_t a,
                                   uint64_t b) const {
    if (pattern.empty()) throw std::invalid_argument("count: empty pattern");
    if (a > b || a > lt_.universe) return 0;
    b = std::min(b, lt_.universe);
    auto enc = encode(pattern);
    if (!enc) return 0;
    return count_long(*enc, a, b, nullptr);
}

std::optional<uint32_t> SrcIndex::report_one(std::span<const uint32_t> pattern,
                                             uint64_t a, uint64_t b) const {
    if (pattern.empty()) throw std::invalid_argument("report_one: empty pattern");
    if (a > b || a > lt_.universe) return std::nullopt;
    b = std::min(b, lt_.universe);
    auto enc = encode(pattern);
    if (!enc) return std::nullopt;

    if (enc->size() > tts_.tau) {
        std::optional<uint32_t> pos;
        count_long(*enc, a, b, &pos);
        return pos;
    }

    std::vector<DescentStep> steps;
    uint64_t entry = 0;
    if (count_short(*enc, a, b, nullptr, &steps, &entry) == 0)
        return std::nullopt;
    // Climb back to the root, converting the entry index with one select per
    // stored ancestor, then map through the root permutation.
    uint64_t j = entry;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
        j = it->parent_string->select(it->c, j);
    return tts_.root_positions[j - 1];
}

}  // namespace srcount
