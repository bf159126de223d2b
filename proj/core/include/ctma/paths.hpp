#ifndef CTMA_PATHS_HPP
#define CTMA_PATHS_HPP

#include <cstdint>
#include <vector>

#include "ctma/errors.hpp"

namespace ctma {

/// Uniform time grid: n items at spacing dt starting from t0. An item is a
/// sample time for SamplePath and a cell for IncrementPath (see below).
struct Grid {
    double t0 = 0.0;
    double dt = 1.0;
    std::int64_t n = 0;

    double time(std::int64_t i) const { return t0 + static_cast<double>(i) * dt; }
    double t_end() const { return time(n); }

    void validate() const {
        if (!(dt > 0.0)) throw DomainError("Grid: dt must be > 0");
        if (n < 1) throw DomainError("Grid: n must be >= 1");
    }
};

/// How small jumps were handled when synthesizing increments. Part of the
/// reproducibility contract: identical (triplet, grid, seed, scheme) inputs
/// regenerate bit-identical increments.
struct SmallJumpScheme {
    double epsilon = 0.0;        // jumps with |x| <= epsilon replaced by Gaussian
    double sigma_epsilon = 0.0;  // sqrt(∫_{|x|<=eps} x^2 ν)
    double big_jump_rate = 0.0;  // ν(|x| > eps)
    bool cost_capped = false;    // epsilon raised to keep the jump rate tractable
};

/// Increments ΔL of the driving process over the grid cells
/// (t0 + i dt, t0 + (i+1) dt], i = 0..n-1.
struct IncrementPath {
    Grid grid;
    std::vector<double> increments;
    std::uint64_t seed = 0;
    SmallJumpScheme scheme;

    /// Cumulative path L(t0 + i dt), i = 0..n, pinned L(t0) = 0.
    std::vector<double> cumulative() const;
};

/// Values sampled at the n grid times t0 + i dt, i = 0..n-1.
struct SamplePath {
    Grid grid;
    std::vector<double> values;
};

/// Coarsen by summing blocks of `factor` consecutive increments; used to
/// couple refinement studies across grids. n must be divisible by factor.
IncrementPath aggregate(const IncrementPath& fine, std::int64_t factor);

} // namespace ctma

#endif
