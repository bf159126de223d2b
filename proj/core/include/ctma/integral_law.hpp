#ifndef CTMA_INTEGRAL_LAW_HPP
#define CTMA_INTEGRAL_LAW_HPP

#include <complex>
#include <functional>

#include "ctma/kernels.hpp"
#include "ctma/levy.hpp"

namespace ctma {

/// Law of the stochastic integral ∫ f dL: characteristic triplet
/// (γ^f, B^f, ν^f) and the cumulant θ ↦ ∫ ψ(f(s)θ) ds. ν^f is exposed as an
/// interval evaluator because the pushforward has no closed form in general.
struct IntegralLaw {
    double gamma_f = 0.0;
    double b_f = 0.0;
    /// ν^f((lo, hi]) for intervals with 0 ∉ [lo, hi].
    std::function<double(double, double)> nu_f;
    std::function<std::complex<double>(double)> cumulant;
};

/// Cumulant of ∫ f dL at θ: ∫ ψ(f(s)θ) ds over the kernel support.
std::complex<double> ctma_cumulant(const LevyTriplet& triplet, const Kernel& f,
                                   double theta);

/// Computes (γ^f, B^f, ν^f) by (nested) quadrature. Divergent components
/// raise QuadratureError naming the component.
IntegralLaw integral_law(const LevyTriplet& triplet, const Kernel& f);

} // namespace ctma

#endif
