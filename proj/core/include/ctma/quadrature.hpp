#ifndef CTMA_QUADRATURE_HPP
#define CTMA_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace ctma::quad {

using Fn = std::function<double(double)>;

struct Options {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_panels = 4000;
};

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    long evals = 0;
    bool converged = false;
};

/// 15-point Gauss-Kronrod rule with embedded 7-point Gauss error estimate.
Result gauss_kronrod_15(const Fn& f, double a, double b);

/// Adaptive bisection of [a, b], worst-panel-first.
Result adaptive(const Fn& f, double a, double b, const Options& opt = {});

/// Adaptive on [a, b] with known interior breakpoints (kinks) at which the
/// initial panels are split.
Result adaptive_split(const Fn& f, double a, double b,
                      const std::vector<double>& breakpoints,
                      const Options& opt = {});

/// Adaptive on [a, b] (0 < a < b) pre-split on the geometric grid a·2^k, so
/// wide dynamic ranges start with well-scaled panels.
Result adaptive_geometric(const Fn& f, double a, double b, const Options& opt = {});

/// ∫_a^b f where f ~ C (x-a)^{-p} as x→a+ with p < 1.
/// Substitutes u = (x-a)^{1-p} so the transformed integrand is bounded.
Result adaptive_singular_lower(const Fn& f, double a, double b, double p,
                               const Options& opt = {});

/// Mirror image: f ~ C (b-x)^{-p} as x→b-.
Result adaptive_singular_upper(const Fn& f, double a, double b, double p,
                               const Options& opt = {});

enum class Verdict { finite, divergent, inconclusive };

struct Classified {
    Verdict verdict = Verdict::inconclusive;
    double value = 0.0;     // partial sum; meaningful only when finite
    double abs_error = 0.0; // remainder bound when finite
    long evals = 0;
    int panels = 0;
};

/// Classify ∫_(0,b] f for a nonnegative integrand with a possible
/// singularity at 0. Sums geometric panels [b 2^{-k-1}, b 2^{-k}]; a
/// decaying panel ratio yields a remainder bound, a non-decaying one is
/// declared divergent.
Classified classify_lower(const Fn& f, double b, const Options& opt = {});

/// Classify ∫_[a,∞) f for a nonnegative integrand; doubling panels
/// [a 2^k, a 2^{k+1}] (a > 0).
Classified classify_upper(const Fn& f, double a, const Options& opt = {});

/// Convenience: value of a classified integral, throwing QuadratureError
/// when divergent or inconclusive.
double classified_value(const Classified& c, const char* what);

} // namespace ctma::quad

#endif
