#ifndef CTMA_INVERT_HPP
#define CTMA_INVERT_HPP

#include <string>

#include "ctma/paths.hpp"

namespace ctma {

/// A recovered driving path L̂, pinned L̂ = 0 at its first node. The
/// identities determine increments only, so the absolute level is a
/// convention.
struct RecoveryResult {
    SamplePath recovered;
    std::string method;
    double lambda = 0.0;     // langevin
    double alpha = 0.0;      // gamma pipeline
    double horizon = 0.0;    // gamma pipeline
    double k_alpha_value = 0.0;
};

/// Langevin identity L_t − L_s = X_t − X_s + λ ∫_s^t X_u du, with the
/// integral by the trapezoid rule (X is càdlàg; no higher order is
/// justified at jumps).
RecoveryResult langevin_recover(const SamplePath& x, double lambda);

/// Anticipating identity L̂(t) = ∫_{t0}^t X ds − X(t) + X(t0).
RecoveryResult anticipating_recover(const SamplePath& x);

/// k_α = ∫_0^1 x^α (1−x)^{−α−1} dx = B(α+1, −α) = −π / sin(πα) for
/// α ∈ (−1, 0); cross-checked against singular-endpoint quadrature of the
/// defining integral to 1e-8 on every call. The constant is +∞ for α ≥ 0,
/// which is rejected.
double k_alpha(double alpha);

/// Fractional integration of a Gamma(α) CTMA path against μ(du) =
/// φ_{−α−1}(u) du, divided by k_α: returns the OU(1) path driven by the
/// same Lévy process, up to discretization. The output grid is the input
/// trimmed by `horizon` at the start.
SamplePath gamma_to_ou(const SamplePath& x, double alpha, double horizon);

/// Full causal recovery: gamma_to_ou then langevin_recover with λ = 1.
RecoveryResult gamma_recover(const SamplePath& x, double alpha, double horizon);

struct PathError {
    double sup_error = 0.0;
    double rmse = 0.0;
};

/// Compares a recovered path against the truth increments on their common
/// sub-grid, both pinned to 0 at the first common node.
PathError recovery_error(const IncrementPath& truth, const RecoveryResult& recovered);

/// μ((cutoff, horizon]) = ∫ φ_{−α−1}(u) du on (cutoff, horizon]; diagnostic
/// for the α ≥ 0 breakdown: the mass grows without bound as cutoff → 0 when
/// α > 0 and converges when α < 0.
double mu_mass_above_cutoff(double alpha, double cutoff, double horizon);

} // namespace ctma

#endif
