#ifndef CTMA_SIMULATE_HPP
#define CTMA_SIMULATE_HPP

#include <cstdint>

#include "ctma/kernels.hpp"
#include "ctma/levy.hpp"
#include "ctma/paths.hpp"

namespace ctma {

struct SmallJumpOptions {
    double sigma_factor = 0.01;  // target σ(ε) ≤ sigma_factor · √dt
    double epsilon_floor = 1e-6;
    double max_mean_jumps_per_cell = 1e4; // ε is raised if the rate exceeds this
};

/// Per cell: ΔL = drift·dt + √((b+σ²(ε))dt)·Z + Σ jumps(|x|>ε) with the
/// τ-truncation compensator folded into the drift. Finite-activity measures
/// are simulated exactly (ε plays no role). Deterministic per seed via
/// counter-keyed substreams, one per cell.
IncrementPath simulate_increments(const LevyTriplet& triplet, const Grid& grid,
                                  std::uint64_t seed,
                                  const SmallJumpOptions& opts = {});

/// Discretized stochastic convolution X(t_i) = Σ_k w_k ΔL_{...} with
/// cell-averaged kernel weights; FFT when the work n·(warmup/dt) exceeds
/// 1e5, direct otherwise. Output grid is the sub-grid of increment-path
/// nodes with full stencil coverage (trimmed by `warmup` on the causal
/// side, and symmetrically for anticausal/two-sided kernels).
/// warmup = 0 picks the kernel default (twice the 1e-12 horizon).
SamplePath simulate_ctma(const Kernel& kernel, const IncrementPath& increments,
                         double warmup = 0.0);

/// Reference OU path generator for inversion studies:
/// X_{i+1} = e^{-λ dt} (X_i + ΔL_i), i.e. a left-endpoint innovation weight.
/// Emits values at all n+1 increment-path nodes.
SamplePath simulate_ou_exact(double lambda, const IncrementPath& increments,
                             double x0 = 0.0);

} // namespace ctma

#endif
