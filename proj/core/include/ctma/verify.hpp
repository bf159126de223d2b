#ifndef CTMA_VERIFY_HPP
#define CTMA_VERIFY_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ctma/kernels.hpp"
#include "ctma/levy.hpp"
#include "ctma/paths.hpp"

namespace ctma {

/// Empirical vs theoretical characteristic function of the stationary law
/// X(t*) = ∫ f(t*−s) dL_s, with per-θ 95% Monte Carlo bands.
struct CfReport {
    std::vector<double> theta;
    std::vector<std::complex<double>> empirical;
    std::vector<std::complex<double>> theoretical;
    std::vector<double> half_width; // 1.96 √(max(v̂_re, v̂_im)/N)
    double max_excess = 0.0;        // worst standardized component deviation
    int n_outside = 0;              // points with a component outside its band
    double fraction_outside = 0.0;
};

/// exp(∫ ψ(θ f(s)) ds) by quadrature over the kernel support.
std::complex<double> theoretical_cf(const LevyTriplet& triplet, const Kernel& kernel,
                                    double theta);

struct EmpiricalCf {
    std::vector<std::complex<double>> cf;
    std::vector<double> half_width;
};

/// (1/N) Σ e^{iθX_k} with per-θ half-widths 1.96 √(v̂/N), v̂ the larger of
/// the real/imaginary component variances. Compensated summation keeps the
/// aggregation order-independent.
EmpiricalCf empirical_cf(std::span<const double> samples,
                         std::span<const double> theta_grid);

struct CfOptions {
    double dt = 0.01;
    double warmup = 0.0; // 0 → kernel horizon(1e-12)
    double theta_min = -5.0, theta_max = 5.0, theta_step = 0.25;
    int threads = 0; // 0 → hardware concurrency
};

/// Simulates n_paths independent stationary samples (one draw per path,
/// per-path derived seeds) and compares against theoretical_cf on the
/// θ-grid. Deterministic for fixed inputs regardless of thread count.
CfReport cf_agreement(const LevyTriplet& triplet, const Kernel& kernel,
                      std::int64_t n_paths, std::uint64_t seed,
                      const CfOptions& opts = {});

/// Discrete-L² least-squares projection of the target onto
/// span{ f(t_i − ·) } for each prefix of the shift list. An L² proxy for
/// the Orlicz-space density statement, exact in the square-integrable case.
struct ResidualCurve {
    std::vector<int> shift_counts;
    std::vector<double> residual_norms;
    std::string target;
    std::string kernel;
};

ResidualCurve density_residual(const Kernel& kernel, const Kernel& target,
                               std::span<const double> shifts, const Grid& grid,
                               std::span<const int> counts = {});

/// Stationary-case Fubini precondition (f(u,s) = g(u−s)): μ(domain) < ∞ and
/// g ∈ L_{Ψ₁}. Reports both numbers.
struct FubiniReport {
    bool holds = false;
    bool mu_mass_finite = false;
    double mu_mass = 0.0; // +inf when divergent
    bool psi1_member = false;
    bool psi_member = false;
    std::string notes;
};

FubiniReport fubini_condition(const Kernel& g, const Kernel& mu_density,
                              const LevyTriplet& triplet, double domain_lo,
                              double domain_hi);

} // namespace ctma

#endif
