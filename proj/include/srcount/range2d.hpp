#ifndef SRCOUNT_RANGE2D_HPP
#define SRCOUNT_RANGE2D_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "srcount/wavelet_tree.hpp"

namespace srcount {

// Rectangle counting over points (x, y) with one point per x in 1..n.
// The y sequence is remapped to dense ranks among its distinct values and
// stored in a wavelet tree, so queries cost O(log n) regardless of the
// label universe.
class RangeCounter2D {
public:
    RangeCounter2D() = default;
    explicit RangeCounter2D(std::span<const uint64_t> ys);

    std::size_t n_points() const { return wt_.size(); }

    // |{x in [x1, x2] : y(x) in [y1, y2]}|; empty ranges count zero.
    std::size_t count_rect(std::size_t x1, std::size_t x2, uint64_t y1,
                           uint64_t y2) const;

    // Any x in [x1, x2] whose y falls in [y1, y2], if one exists.
    std::optional<std::size_t> find_any(std::size_t x1, std::size_t x2,
                                        uint64_t y1, uint64_t y2) const;

private:
    std::optional<std::pair<uint32_t, uint32_t>> dense_range(uint64_t y1,
                                                             uint64_t y2) const;

    std::vector<uint64_t> distinct_;
    WaveletTree wt_;
};

}  // namespace srcount

#endif
