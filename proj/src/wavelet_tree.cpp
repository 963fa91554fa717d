#include "srcount/wavelet_tree.hpp"

#include <stdexcept>
#include <utility>

namespace srcount {

WaveletTree::WaveletTree(std::vector<uint32_t> seq, uint32_t alphabet_size)
    : n_(seq.size()), sigma_(alphabet_size) {
    if (sigma_ == 0) throw std::invalid_argument("wavelet tree: empty alphabet");
    for (uint32_t c : seq)
        if (c >= sigma_)
            throw std::invalid_argument("wavelet tree: symbol out of range");
    build(std::move(seq), 0, sigma_ - 1);
}

uint32_t WaveletTree::build(std::vector<uint32_t>&& seq, uint32_t lo, uint32_t hi) {
    uint32_t id = static_cast<uint32_t>(nodes_.size());
    nodes_.emplace_back();
    nodes_[id].len = seq.size();
    if (lo == hi) return id;

    uint32_t mid = lo + (hi - lo) / 2;
    BitVector bv(seq.size());
    std::vector<uint32_t> left_seq, right_seq;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] <= mid) {
            left_seq.push_back(seq[i]);
        } else {
            bv.set(i);
            right_seq.push_back(seq[i]);
        }
    }
    bv.finalize();
    seq.clear();
    seq.shrink_to_fit();
    nodes_[id].bv = std::move(bv);
    uint32_t l = build(std::move(left_seq), lo, mid);
    uint32_t r = build(std::move(right_seq), mid + 1, hi);
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
}

std::size_t WaveletTree::rank(uint32_t c, std::size_t i) const {
    if (i > n_) throw std::invalid_argument("rank: position out of range");
    if (c >= sigma_) return 0;
    uint32_t node = 0, lo = 0, hi = sigma_ - 1;
    while (lo < hi) {
        uint32_t mid = lo + (hi - lo) / 2;
        const Node& nd = nodes_[node];
        if (c <= mid) {
            i = nd.bv.rank0(i);
            node = nd.left;
            hi = mid;
        } else {
            i = nd.bv.rank1(i);
            node = nd.right;
            lo = mid + 1;
        }
    }
    return i;
}

std::size_t WaveletTree::select_rec(uint32_t node, uint32_t lo, uint32_t hi,
                                    uint32_t c, std::size_t j) const {
    if (lo == hi) {
        if (j > nodes_[node].len)
            throw std::out_of_range("select: rank exceeds occurrences");
        return j;
    }
    uint32_t mid = lo + (hi - lo) / 2;
    const Node& nd = nodes_[node];
    if (c <= mid) {
        std::size_t p = select_rec(nd.left, lo, mid, c, j);
        return nd.bv.select0(p) + 1;
    }
    std::size_t p = select_rec(nd.right, mid + 1, hi, c, j);
    return nd.bv.select1(p) + 1;
}

std::size_t WaveletTree::select(uint32_t c, std::size_t j) const {
    if (c >= sigma_ || j == 0)
        throw std::out_of_range("select: no such occurrence");
    return select_rec(0, 0, sigma_ - 1, c, j);
}

uint32_t WaveletTree::access(std::size_t i) const {
    if (i == 0 || i > n_) throw std::invalid_argument("access: position out of range");
    uint32_t node = 0, lo = 0, hi = sigma_ - 1;
    --i;  // 0-based within node
    while (lo < hi) {
        uint32_t mid = lo + (hi - lo) / 2;
        const Node& nd = nodes_[node];
        if (!nd.bv.get(i)) {
            i = nd.bv.rank0(i);
            node = nd.left;
            hi = mid;
        } else {
            i = nd.bv.rank1(i);
            node = nd.right;
            lo = mid + 1;
        }
    }
    return lo;
}

std::size_t WaveletTree::count_rec(uint32_t node, uint32_t lo, uint32_t hi,
                                   std::size_t l, std::size_t r, uint32_t clo,
                                   uint32_t chi) const {
    if (l > r || chi < lo || clo > hi) return 0;
    if (clo <= lo && hi <= chi) return r - l + 1;
    uint32_t mid = lo + (hi - lo) / 2;
    const Node& nd = nodes_[node];
    std::size_t l0 = nd.bv.rank0(l - 1), r0 = nd.bv.rank0(r);
    std::size_t l1 = (l - 1) - l0, r1 = r - r0;
    std::size_t total = 0;
    if (l0 < r0) total += count_rec(nd.left, lo, mid, l0 + 1, r0, clo, chi);
    if (l1 < r1) total += count_rec(nd.right, mid + 1, hi, l1 + 1, r1, clo, chi);
    return total;
}

std::size_t WaveletTree::range_count(std::size_t l, std::size_t r, uint32_t clo,
                                     uint32_t chi) const {
    if (l == 0 || r > n_ || l > r || clo > chi) return 0;
    return count_rec(0, 0, sigma_ - 1, l, r, clo, chi);
}

std::optional<std::size_t> WaveletTree::find_rec(uint32_t node, uint32_t lo,
                                                 uint32_t hi, std::size_t l,
                                                 std::size_t r, uint32_t clo,
                                                 uint32_t chi) const {
    if (l > r || chi < lo || clo > hi) return std::nullopt;
    if (lo == hi) return l;  // any position works; pick the first
    uint32_t mid = lo + (hi - lo) / 2;
    const Node& nd = nodes_[node];
    std::size_t l0 = nd.bv.rank0(l - 1), r0 = nd.bv.rank0(r);
    if (auto p = find_rec(nd.left, lo, mid, l0 + 1, r0, clo, chi))
        return nd.bv.select0(*p) + 1;
    std::size_t l1 = (l - 1) - l0, r1 = r - r0;
    if (auto p = find_rec(nd.right, mid + 1, hi, l1 + 1, r1, clo, chi))
        return nd.bv.select1(*p) + 1;
    return std::nullopt;
}

std::optional<std::size_t> WaveletTree::find_any(std::size_t l, std::size_t r,
                                                 uint32_t clo, uint32_t chi) const {
    if (l == 0 || r > n_ || l > r || clo > chi) return std::nullopt;
    return find_rec(0, 0, sigma_ - 1, l, r, clo, chi);
}

}  // namespace srcount
