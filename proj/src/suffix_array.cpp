#include "srcount/suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace srcount {

std::vector<uint32_t> build_suffix_array(std::span<const uint32_t> text) {
    std::size_t n = text.size();
    std::vector<uint32_t> sa(n), rank(n), tmp(n);
    std::iota(sa.begin(), sa.end(), 0);
    std::sort(sa.begin(), sa.end(),
              [&](uint32_t a, uint32_t b) { return text[a] < text[b]; });
    rank[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i)
        rank[sa[i]] = rank[sa[i - 1]] + (text[sa[i]] != text[sa[i - 1]] ? 1 : 0);

    for (std::size_t k = 1; k < n && rank[sa[n - 1]] != n - 1; k *= 2) {
        auto key = [&](uint32_t i) {
            return std::pair<uint32_t, uint32_t>(
                rank[i], i + k < n ? rank[i + k] + 1 : 0);
        };
        std::sort(sa.begin(), sa.end(),
                  [&](uint32_t a, uint32_t b) { return key(a) < key(b); });
        tmp[sa[0]] = 0;
        for (std::size_t i = 1; i < n; ++i)
            tmp[sa[i]] = tmp[sa[i - 1]] + (key(sa[i]) != key(sa[i - 1]) ? 1 : 0);
        rank.swap(tmp);
    }
    return sa;
}

std::vector<uint32_t> build_lcp_array(std::span<const uint32_t> text,
                                      std::span<const uint32_t> sa) {
    std::size_t n = text.size();
    std::vector<uint32_t> rank(n), lcp(n, 0);
    for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = static_cast<uint32_t>(i);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        std::size_t j = sa[rank[i] - 1];
        if (h > 0) --h;
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        lcp[rank[i]] = static_cast<uint32_t>(h);
    }
    return lcp;
}

}  // namespace srcount
