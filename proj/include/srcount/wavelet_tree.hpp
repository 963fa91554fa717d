#ifndef SRCOUNT_WAVELET_TREE_HPP
#define SRCOUNT_WAVELET_TREE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "srcount/bit_vector.hpp"

namespace srcount {

// Balanced wavelet tree over a dense alphabet [0, sigma), built on
// rank-directory bitvectors. Supports rank/select/access in O(log sigma)
// plus 2-sided range frequency queries used for rectangle counting.
//
// Positions are 1-based in the public interface; rank(c, i) counts
// occurrences of c in the length-i prefix, so i ranges over [0, n].
class WaveletTree {
public:
    WaveletTree() = default;
    WaveletTree(std::vector<uint32_t> seq, uint32_t alphabet_size);

    std::size_t size() const { return n_; }
    uint32_t alphabet_size() const { return sigma_; }

    // Occurrences of c in positions 1..i.
    std::size_t rank(uint32_t c, std::size_t i) const;

    // 1-based position of the j-th occurrence of c. Throws std::out_of_range
    // if fewer than j occurrences exist.
    std::size_t select(uint32_t c, std::size_t j) const;

    // Symbol at 1-based position i.
    uint32_t access(std::size_t i) const;

    // |{p in [l, r] : clo <= seq[p] <= chi}| over 1-based inclusive bounds.
    std::size_t range_count(std::size_t l, std::size_t r, uint32_t clo,
                            uint32_t chi) const;

    // Some 1-based position p in [l, r] with seq[p] in [clo, chi], if any.
    std::optional<std::size_t> find_any(std::size_t l, std::size_t r,
                                        uint32_t clo, uint32_t chi) const;

private:
    struct Node {
        BitVector bv;           // empty at leaves
        std::size_t len = 0;
        uint32_t left = kNone;
        uint32_t right = kNone;
    };
    static constexpr uint32_t kNone = UINT32_MAX;

    uint32_t build(std::vector<uint32_t>&& seq, uint32_t lo, uint32_t hi);
    std::size_t select_rec(uint32_t node, uint32_t lo, uint32_t hi, uint32_t c,
                           std::size_t j) const;
    std::size_t count_rec(uint32_t node, uint32_t lo, uint32_t hi,
                          std::size_t l, std::size_t r, uint32_t clo,
                          uint32_t chi) const;
    std::optional<std::size_t> find_rec(uint32_t node, uint32_t lo, uint32_t hi,
                                        std::size_t l, std::size_t r,
                                        uint32_t clo, uint32_t chi) const;

    std::size_t n_ = 0;
    uint32_t sigma_ = 0;
    std::vector<Node> nodes_;
};

}  // namespace srcount

#endif
