#include "srcount/applications.hpp"

#include <algorithm>
#include <stdexcept>

namespace srcount {

namespace {

std::vector<uint32_t> sentinel_terminated(std::span<const uint32_t> text,
                                          uint32_t sigma, bool reversed) {
    std::vector<uint32_t> seq;
    seq.reserve(text.size() + 1);
    if (reversed) {
        for (auto it = text.rbegin(); it != text.rend(); ++it) seq.push_back(*it + 1);
    } else {
        for (uint32_t c : text) seq.push_back(c + 1);
    }
    for (uint32_t c : text)
        if (c >= sigma) throw std::invalid_argument("character out of alphabet");
    seq.push_back(0);
    return seq;
}

// Full lexicographic rank (1-based, sentinel suffix included) per 1-based
// suffix start position.
std::vector<uint32_t> inverse_ranks(const SuffixTree& st) {
    std::vector<uint32_t> inv(st.text_size() + 1, 0);
    for (uint32_t r = 1; r <= st.text_size(); ++r)
        inv[st.suffix_position(r)] = r;
    return inv;
}

// Rank interval of the proper suffixes starting with the pattern, shifted
// past the sentinel suffix at rank 1.
std::optional<std::pair<uint64_t, uint64_t>> proper_suffix_interval(
    const SuffixTree& st, std::span<const uint32_t> pattern, uint32_t sigma) {
    std::vector<uint32_t> enc;
    enc.reserve(pattern.size());
    for (uint32_t c : pattern) {
        if (c >= sigma) return std::nullopt;
        enc.push_back(c + 1);
    }
    LocusResult loc = st.locus(enc);
    if (!loc.matched) return std::nullopt;
    auto [lo, hi] = st.suffix_interval(loc.locus_node);
    return std::make_pair<uint64_t, uint64_t>(lo - 1, hi - 1);
}

}  // namespace

SrcIndex prsc_build(std::span<const uint32_t> text, uint32_t sigma) {
    LabeledText lt;
    lt.text.assign(text.begin(), text.end());
    lt.sigma = sigma;
    lt.universe = text.size();
    lt.labels.resize(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) lt.labels[i] = i + 1;
    return SrcIndex(std::move(lt));
}

uint64_t prsc_count(const SrcIndex& idx, std::span<const uint32_t> pattern,
                    uint32_t i, uint32_t j) {
    if (i < 1 || i > j || j > idx.size())
        throw std::invalid_argument("prsc: bad position interval");
    return idx.count(pattern, i, j);
}

SrcIndex intervals_build(std::span<const uint32_t> text, uint32_t sigma,
                         const IntervalSet& pi) {
    std::size_t n = text.size();
    std::vector<bool> covered(n + 1, false);
    for (auto [s, e] : pi.intervals) {
        if (s < 1 || s > e || e > n)
            throw std::invalid_argument("intervals: interval out of range");
        for (uint32_t p = s; p <= e; ++p) covered[p] = true;
    }
    LabeledText lt;
    lt.text.assign(text.begin(), text.end());
    lt.sigma = sigma;
    lt.universe = n;
    lt.labels.resize(n);
    for (std::size_t p = 1; p <= n; ++p)
        lt.labels[p - 1] = covered[p] ? p : 0;
    return SrcIndex(std::move(lt));
}

uint64_t intervals_count(const SrcIndex& idx, std::span<const uint32_t> pattern,
                         uint32_t i, uint32_t j) {
    if (i < 1 || i > j || j > idx.size())
        throw std::invalid_argument("intervals: bad position interval");
    return idx.count(pattern, i, j);
}

GappedIndex::GappedIndex(std::span<const uint32_t> text, uint32_t sigma,
                         uint32_t d)
    : d_(d),
      sigma_(sigma),
      rev_st_(sentinel_terminated(text, sigma, true)),
      idx_([&] {
          std::size_t n = text.size();
          std::vector<uint32_t> inv = inverse_ranks(rev_st_);
          LabeledText lt;
          lt.text.assign(text.begin(), text.end());
          lt.sigma = sigma;
          lt.universe = n;
          lt.labels.assign(n, 0);
          // Reversed prefix S[1..i] is the suffix of reverse(S) at n - i + 1;
          // its proper rank labels position i + d + 1.
          for (std::size_t i = 1; i <= n; ++i) {
              std::size_t target = i + d + 1;
              if (target > n) break;
              lt.labels[target - 1] = inv[n - i + 1] - 1;
          }
          return SrcIndex(std::move(lt));
      }()) {}

uint64_t GappedIndex::count(std::span<const uint32_t> p1,
                            std::span<const uint32_t> p2) const {
    if (p1.empty() || p2.empty())
        throw std::invalid_argument("gaps: empty pattern");
    std::vector<uint32_t> p1_rev(p1.rbegin(), p1.rend());
    auto interval = proper_suffix_interval(rev_st_, p1_rev, sigma_);
    if (!interval) return 0;
    return idx_.count(p2, interval->first, interval->second);
}

AlignedIndex::AlignedIndex(std::span<const uint32_t> s1,
                           std::span<const uint32_t> s2, uint32_t sigma)
    : AlignedIndex(s1, s2, sigma, {}) {}

AlignedIndex::AlignedIndex(std::span<const uint32_t> s1,
                           std::span<const uint32_t> s2, uint32_t sigma,
                           std::span<const uint32_t> position_map)
    : sigma_(sigma),
      s2_st_(sentinel_terminated(s2, sigma, false)),
      idx_([&] {
          std::size_t n1 = s1.size(), n2 = s2.size();
          std::vector<uint32_t> inv = inverse_ranks(s2_st_);
          LabeledText lt;
          lt.text.assign(s1.begin(), s1.end());
          lt.sigma = sigma;
          lt.universe = n2;
          lt.labels.assign(n1, 0);
          for (std::size_t i = 1; i <= n1; ++i) {
              std::size_t target = position_map.empty()
                                       ? i
                                       : position_map[i - 1];
              if (target >= 1 && target <= n2)
                  lt.labels[i - 1] = inv[target] - 1;
          }
          return SrcIndex(std::move(lt));
      }()) {}

uint64_t AlignedIndex::count(std::span<const uint32_t> p1,
                             std::span<const uint32_t> p2) const {
    if (p1.empty() || p2.empty())
        throw std::invalid_argument("aligned: empty pattern");
    auto interval = proper_suffix_interval(s2_st_, p2, sigma_);
    if (!interval) return 0;
    return idx_.count(p1, interval->first, interval->second);
}

}  // namespace srcount
