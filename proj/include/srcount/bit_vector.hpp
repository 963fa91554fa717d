#ifndef SRCOUNT_BIT_VECTOR_HPP
#define SRCOUNT_BIT_VECTOR_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace srcount {

// Plain bitvector with a two-level rank directory (superblocks of 512 bits,
// blocks of 64 bits). Select is answered by binary search over the rank
// directories. Immutable once finalized.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(std::size_t n_bits)
        : n_(n_bits), words_((n_bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t size() const { return n_; }

    // Must be called once after all set() calls, before any query.
    void finalize() {
        std::size_t n_words = words_.size();
        super_.assign(n_words / kWordsPerSuper + 1, 0);
        block_.assign(n_words, 0);
        std::size_t total = 0, in_super = 0;
        for (std::size_t w = 0; w < n_words; ++w) {
            if (w % kWordsPerSuper == 0) {
                super_[w / kWordsPerSuper] = total;
                in_super = 0;
            }
            block_[w] = static_cast<uint16_t>(in_super);
            std::size_t pc = std::popcount(words_[w]);
            in_super += pc;
            total += pc;
        }
        ones_ = total;
    }

    std::size_t ones() const { return ones_; }

    // Number of 1 bits in positions [0, i).
    std::size_t rank1(std::size_t i) const {
        if (i == 0) return 0;
        std::size_t w = i >> 6;
        // i == n_ with a full last word: the whole vector
        if (w >= words_.size()) return ones_;
        std::size_t r = super_[w / kWordsPerSuper] + block_[w];
        std::size_t rem = i & 63;
        if (rem != 0)
            r += std::popcount(words_[w] & ((uint64_t{1} << rem) - 1));
        return r;
    }

    std::size_t rank0(std::size_t i) const { return i - rank1(i); }

    // 0-based position of the j-th (1-based) 1 bit.
    std::size_t select1(std::size_t j) const {
        if (j == 0 || j > ones_) throw std::out_of_range("select1: rank out of range");
        return select_impl(j, true);
    }

    // 0-based position of the j-th (1-based) 0 bit.
    std::size_t select0(std::size_t j) const {
        if (j == 0 || j > n_ - ones_) throw std::out_of_range("select0: rank out of range");
        return select_impl(j, false);
    }

private:
    static constexpr std::size_t kWordsPerSuper = 8;  // 512-bit superblocks

    std::size_t select_impl(std::size_t j, bool one) const {
        // binary search for the first prefix with rank >= j
        std::size_t lo = 0, hi = n_;
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            std::size_t r = one ? rank1(mid + 1) : rank0(mid + 1);
            if (r >= j)
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    }

    std::size_t n_ = 0;
    std::size_t ones_ = 0;
    std::vector<uint64_t> words_;
    std::vector<std::size_t> super_;
    std::vector<uint16_t> block_;
};

}  // namespace srcount

#endif
