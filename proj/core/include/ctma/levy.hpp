#ifndef CTMA_LEVY_HPP
#define CTMA_LEVY_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctma/quadrature.hpp"
#include "ctma/rng.hpp"

namespace ctma {

/// The truncation function τ(x) = x / (1 ∨ |x|): odd, bounded by 1,
/// identity on [-1, 1].
inline double truncate(double x) {
    const double ax = std::abs(x);
    return ax > 1.0 ? x / ax : x;
}

struct Atom {
    double x;
    double mass; // jump intensity per unit time
};

/// Far-tail envelope of a Lévy density: an upper bound valid for |x| ≥ from,
/// assumed order-exact. Drives truncation cutoffs for improper integrals and
/// sampler tables.
struct Tail {
    enum class Kind { compact, exponential, power };
    Kind kind = Kind::compact;
    double coef = 0.0;  // C
    double param = 0.0; // rate (C e^{-rate|x|}) or exponent (C |x|^{-p}, p > 1)
    double from = 1.0;

    static Tail compact(double xmax);
    static Tail exponential(double coef, double rate, double from = 1.0);
    static Tail power(double coef, double exponent, double from = 1.0);

    /// Smallest X ≥ from with ∫_{|x|>X} envelope dx ≤ mass_tol (per side).
    double cutoff(double mass_tol) const;
    /// Envelope value at |x| = x ≥ from.
    double envelope(double x) const;
};

/// A Lévy measure ν on ℝ\{0} with ∫ 1∧x² ν(dx) < ∞. One of: the zero
/// measure, a finite list of atoms (finite activity), or a density with
/// declared singularity exponent at the origin and a far-tail descriptor.
class LevyMeasure {
public:
    enum class Kind { zero, atoms, density };

    struct DensitySpec {
        std::function<double(double)> rho; // evaluated only on ℝ\{0}
        bool positive_side = true;
        bool negative_side = false;
        double beta = 0.0; // rho ~ C |x|^{-beta} as x → 0 on charged sides; beta < 3
        Tail tail;
        bool symmetric = false;
        bool finite_activity = false;
        // exact jump-law sampler for named finite-activity families
        std::function<double(rng::CellRng&)> exact_sampler;
        std::string label = "density";
    };

    static LevyMeasure zero();
    static LevyMeasure atoms(std::vector<Atom> atoms);
    static LevyMeasure density(DensitySpec spec);

    // Named families (the specification schema shared with the CLI).
    static LevyMeasure compound_poisson_atoms(double rate, std::vector<Atom> jump_law);
    static LevyMeasure compound_poisson_normal(double rate, double mean, double stddev);
    static LevyMeasure compound_poisson_two_sided_exponential(double rate, double decay);
    static LevyMeasure gamma_subordinator(double shape, double rate);
    static LevyMeasure alpha_stable(double index, double skew, double scale);

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::zero; }
    bool symmetric() const { return symmetric_; }
    bool finite_activity() const { return finite_activity_; }
    double beta() const { return beta_; }
    const Tail& tail() const { return tail_; }
    const std::vector<Atom>& atom_list() const { return atoms_; }
    const std::string& label() const { return label_; }
    double density_at(double x) const;
    bool charges_positive() const { return pos_; }
    bool charges_negative() const { return neg_; }
    /// Total jump intensity; finite-activity measures only.
    double total_mass() const;
    /// Exact jump-law sampler when available (atoms and named laws).
    std::function<double(rng::CellRng&)> exact_jump_sampler() const;

    // --- measure functionals (exact sums for atoms, quadrature otherwise) ---

    /// ∫ 1 ∧ |r x|² ν(dx)
    double trunc_quadratic(double r) const;
    /// ∫ [ |xr|^p 1_{|xr|>1} + |xr|² 1_{|xr|≤1} ] ν(dx)
    double psi_p_jump(double r, double p) const;
    /// ∫ [ τ(x r) − r τ(x) ] ν(dx)
    double tau_compensator(double r) const;
    /// ∫ [ e^{izx} − 1 − i z τ(x) ] ν(dx); abs_error reported via out-param.
    std::complex<double> exp_compensated(double z, double* abs_error = nullptr) const;
    /// ν(|x| > u), u > 0
    double mass_above(double u) const;
    /// ν((lo, hi]) for an interval with 0 ∉ [lo, hi]; +inf if 0 is interior
    /// and the activity is infinite.
    double mass_interval(double lo, double hi) const;
    /// ∫_{|x| ≤ u} x² ν(dx)
    double var_below(double u) const;
    /// ∫_{|x| > eps} τ(x) ν(dx)
    double tau_mean_above(double eps) const;
    /// ∫ (x − τ(x)) ν(dx), finite iff ∫_{|x|>1}|x|ν < ∞ (classified).
    quad::Classified mean_jump_excess() const;

    // Classified moments used by the integrability rule engine.
    quad::Classified log_moment_above_one() const;
    quad::Classified power_moment_above_one(double p) const;
    quad::Classified square_log_moment_below_one() const;
    quad::Classified power_moment_below_one(double p) const;

    /// ∫ 1∧x² ν(dx), the construction invariant.
    double levy_integral() const { return trunc_quadratic(1.0); }

private:
    LevyMeasure() = default;
    Kind kind_ = Kind::zero;
    std::vector<Atom> atoms_;
    std::function<double(double)> rho_;
    bool pos_ = false, neg_ = false;
    double beta_ = 0.0;
    Tail tail_;
    bool symmetric_ = true;
    bool finite_activity_ = true;
    std::function<double(rng::CellRng&)> exact_sampler_;
    std::string label_ = "zero";
};

/// Homogeneous characteristic triplet (γ, B, ν); scalar case, so B = tr B = b.
class LevyTriplet {
public:
    LevyTriplet(double gamma, double b, LevyMeasure nu);

    double gamma() const { return gamma_; }
    double b() const { return b_; }
    const LevyMeasure& nu() const { return nu_; }
    std::string label() const;

    /// E[L_1] = γ + ∫ (x − τ(x)) ν(dx); nullopt when the first moment is
    /// infinite.
    std::optional<double> mean() const;

private:
    double gamma_;
    double b_;
    LevyMeasure nu_;
};

/// Lévy-Khintchine exponent ψ(z) = iγz − ½bz² + ∫ [e^{izx} − 1 − izτ(x)] ν(dx).
/// Hermitian by construction: ψ(−z) = conj ψ(z).
std::complex<double> cumulant_psi(const LevyTriplet& triplet, double z);

} // namespace ctma

#endif
