#include "ctma/integral_law.hpp"

#include <cmath>

#include "ctma/errors.hpp"
#include "ctma/quadrature.hpp"

namespace ctma {

namespace {

// Geometric-panel sum of a signed integrand over (0, b], panels toward 0.
// Stops once three consecutive panels are negligible; guards against
// blow-up so a divergent component is reported instead of looping.
double signed_lower_sum(const quad::Fn& g, double b, const char* component) {
    if (!(b > 0.0)) return 0.0;
    double sum = 0.0;
    int tiny_run = 0;
    double prev = 0.0;
    int growing = 0;
    for (int k = 0; k < 1000; ++k) {
        const double hi = b * std::pow(0.5, k);
        const double lo = 0.5 * hi;
        const double p = quad::gauss_kronrod_15(g, lo, hi).value;
        if (!std::isfinite(p) || std::abs(sum) > 1e300)
            throw QuadratureError(std::string(component) + ": integral diverges",
                                  sum, 0.0);
        sum += p;
        const double tol = std::max(1e-12, 1e-10 * std::abs(sum));
        if (std::abs(p) < tol) {
            if (++tiny_run >= 3) return sum;
        } else {
            tiny_run = 0;
        }
        if (k > 8 && std::abs(p) >= std::abs(prev) && std::abs(p) > 1e-9)
            ++growing;
        else
            growing = 0;
        if (growing > 40)
            throw QuadratureError(std::string(component) + ": integral diverges",
                                  sum, std::abs(p));
        prev = p;
    }
    return sum;
}

struct SupportPieces {
    // integrate h over the kernel support; h is called with the signed s
    double lower_b = 0.0;   // (0, lower_b] toward 0, reflected flag below
    double upper_a = 0.0;   // [upper_a, upper_H]
    double upper_H = 0.0;
    bool reflect = false;   // anticausal: s -> -s
    bool two_sided = false;
};

SupportPieces pieces_for(const Kernel& f) {
    SupportPieces p;
    const double H = std::max(f.horizon(1e-14), 1.0);
    p.lower_b = 1.0;
    p.upper_a = 1.0;
    p.upper_H = H;
    p.reflect = f.support() == Support::anticausal;
    p.two_sided = f.support() == Support::two_sided;
    return p;
}

// ∫ h(s) ds over the support of f, h signed.
double support_integral(const Kernel& f, const quad::Fn& h, const char* component) {
    const auto p = pieces_for(f);
    auto one_side = [&](int side) {
        auto g = [&](double x) { return h(side * x); };
        double total = signed_lower_sum(g, p.lower_b, component);
        quad::Options opt;
        opt.max_panels = 8000;
        auto res = quad::adaptive_geometric(g, p.upper_a, p.upper_H, opt);
        if (!res.converged)
            throw QuadratureError(std::string(component) + ": quadrature did not converge",
                                  total + res.value, res.abs_error);
        return total + res.value;
    };
    if (p.two_sided) return one_side(+1) + one_side(-1);
    return one_side(p.reflect ? -1 : +1);
}

// Nonnegative variant with divergence classification toward the origin.
double support_integral_classified(const Kernel& f, const quad::Fn& h,
                                   const char* component) {
    const auto p = pieces_for(f);
    auto one_side = [&](int side) {
        auto g = [&](double x) { return h(side * x); };
        const auto low = quad::classify_lower(g, p.lower_b);
        const double low_v = quad::classified_value(low, component);
        quad::Options opt;
        opt.max_panels = 8000;
        auto res = quad::adaptive_geometric(g, p.upper_a, p.upper_H, opt);
        if (!res.converged)
            throw QuadratureError(std::string(component) + ": quadrature did not converge",
                                  low_v + res.value, res.abs_error);
        return low_v + res.value;
    };
    if (p.two_sided) return one_side(+1) + one_side(-1);
    return one_side(p.reflect ? -1 : +1);
}

} // namespace

std::complex<double> ctma_cumulant(const LevyTriplet& triplet, const Kernel& f,
                                   double theta) {
    if (theta == 0.0) return {0.0, 0.0};
    auto re = [&](double s) {
        const double v = f(s);
        return v == 0.0 ? 0.0 : cumulant_psi(triplet, theta * v).real();
    };
    auto im = [&](double s) {
        const double v = f(s);
        return v == 0.0 ? 0.0 : cumulant_psi(triplet, theta * v).imag();
    };
    return {support_integral(f, re, "cumulant (real part)"),
            support_integral(f, im, "cumulant (imaginary part)")};
}

IntegralLaw integral_law(const LevyTriplet& triplet, const Kernel& f) {
    IntegralLaw law;

    // B^f = b ∫ f²(s) ds
    if (triplet.b() > 0.0) {
        auto f2 = [&](double s) {
            const double v = f(s);
            return v * v;
        };
        law.b_f = triplet.b() * support_integral_classified(f, f2, "B^f (b ∫f²)");
    }

    // γ^f = ∫ γ f(s) ds + ∫∫ [τ(x f(s)) − f(s) τ(x)] ν(dx) ds
    {
        auto g = [&](double s) {
            const double v = f(s);
            if (v == 0.0) return 0.0;
            return triplet.gamma() * v + triplet.nu().tau_compensator(v);
        };
        law.gamma_f = support_integral(f, g, "gamma^f");
    }

    // ν^f(A) = ∫ ν({x : f(s) x ∈ A}) ds, intervals A = (lo, hi] away from 0
    {
        const LevyTriplet t = triplet;
        const Kernel kf = f;
        law.nu_f = [t, kf](double lo, double hi) {
            if (!(hi > lo)) throw DomainError("nu_f: requires lo < hi");
            if (lo <= 0.0 && hi >= 0.0)
                throw DomainError("nu_f: interval must not contain 0");
            if (t.nu().is_zero()) return 0.0;
            auto mass = [&](double s) {
                const double v = kf(s);
                if (v == 0.0) return 0.0;
                const double a = lo / v, b = hi / v;
                return t.nu().mass_interval(std::min(a, b), std::max(a, b));
            };
            return support_integral_classified(kf, mass, "nu^f");
        };
    }

    {
        const LevyTriplet t = triplet;
        const Kernel kf = f;
        law.cumulant = [t, kf](double theta) { return ctma_cumulant(t, kf, theta); };
    }
    return law;
}

} // namespace ctma
