#include "ctma/levy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ctma/errors.hpp"

namespace ctma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double checked(const quad::Result& r, const char* what) {
    if (!r.converged)
        throw QuadratureError(std::string(what) + ": quadrature did not converge",
                              r.value, r.abs_error);
    return r.value;
}

quad::Result geometric_adaptive(const quad::Fn& f, double a, double b,
                                const quad::Options& opt = {}) {
    return quad::adaptive_geometric(f, a, b, opt);
}

quad::Classified combine(std::initializer_list<quad::Classified> parts) {
    quad::Classified out;
    out.verdict = quad::Verdict::finite;
    for (const auto& c : parts) {
        out.evals += c.evals;
        out.panels += c.panels;
        if (c.verdict == quad::Verdict::divergent) {
            out.verdict = quad::Verdict::divergent;
            return out;
        }
        if (c.verdict == quad::Verdict::inconclusive)
            out.verdict = quad::Verdict::inconclusive;
        out.value += c.value;
        out.abs_error += c.abs_error;
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------- Tail ----

Tail Tail::compact(double xmax) { return {Kind::compact, 0.0, 0.0, xmax}; }

Tail Tail::exponential(double coef, double rate, double from) {
    if (!(rate > 0.0)) throw DomainError("Tail::exponential: rate must be > 0");
    return {Kind::exponential, coef, rate, from};
}

Tail Tail::power(double coef, double exponent, double from) {
    if (!(exponent > 1.0)) throw DomainError("Tail::power: exponent must be > 1");
    return {Kind::power, coef, exponent, from};
}

double Tail::envelope(double x) const {
    switch (kind) {
        case Kind::compact: return x >= from ? 0.0 : kInf;
        case Kind::exponential: return coef * std::exp(-param * x);
        case Kind::power: return coef * std::pow(x, -param);
    }
    return kInf;
}

double Tail::cutoff(double mass_tol) const {
    switch (kind) {
        case Kind::compact: return from;
        case Kind::exponential: {
            // ∫_X^∞ C e^{-r x} dx = C e^{-r X}/r ≤ tol
            const double x = std::log(std::max(coef / (param * mass_tol), 1.0)) / param;
            return std::max(from, x);
        }
        case Kind::power: {
            // ∫_X^∞ C x^{-p} dx = C X^{1-p}/(p-1) ≤ tol
            const double x =
                std::pow(std::max(coef / ((param - 1.0) * mass_tol), 1.0),
                         1.0 / (param - 1.0));
            return std::max(from, x);
        }
    }
    return from;
}

// ---------------------------------------------------------- LevyMeasure ----

LevyMeasure LevyMeasure::zero() { return LevyMeasure{}; }

LevyMeasure LevyMeasure::atoms(std::vector<Atom> atoms) {
    LevyMeasure m;
    m.kind_ = Kind::atoms;
    for (const auto& a : atoms) {
        if (a.x == 0.0) throw DomainError("LevyMeasure: atom at 0 rejected");
        if (!(a.mass > 0.0)) throw DomainError("LevyMeasure: atom mass must be > 0");
        m.pos_ = m.pos_ || a.x > 0.0;
        m.neg_ = m.neg_ || a.x < 0.0;
    }
    m.atoms_ = std::move(atoms);
    // symmetric iff masses pair up under x -> -x
    m.symmetric_ = true;
    for (const auto& a : m.atoms_) {
        double paired = 0.0;
        for (const auto& o : m.atoms_)
            if (std::abs(o.x + a.x) < 1e-15 * (std::abs(a.x) + 1.0)) paired += o.mass;
        if (std::abs(paired - a.mass) > 1e-12 * a.mass) {
            m.symmetric_ = false;
            break;
        }
    }
    m.finite_activity_ = true;
    m.label_ = "atoms";
    return m;
}

LevyMeasure LevyMeasure::density(DensitySpec spec) {
    if (!spec.rho) throw DomainError("LevyMeasure: density evaluator required");
    if (!spec.positive_side && !spec.negative_side)
        throw DomainError("LevyMeasure: density must charge at least one side");
    // ∫_0 x^{2-beta} dx near the origin requires beta < 3; this is the
    // Lévy-measure condition for a power singularity.
    if (!(spec.beta < 3.0))
        throw DomainError("LevyMeasure: singularity exponent must satisfy beta < 3");
    LevyMeasure m;
    m.kind_ = Kind::density;
    m.rho_ = std::move(spec.rho);
    m.pos_ = spec.positive_side;
    m.neg_ = spec.negative_side;
    m.beta_ = spec.beta;
    m.tail_ = spec.tail;
    m.symmetric_ = spec.symmetric;
    m.finite_activity_ = spec.finite_activity;
    m.exact_sampler_ = std::move(spec.exact_sampler);
    m.label_ = std::move(spec.label);
    // Construction invariant: ∫ 1∧x² ν < ∞.
    const double check = m.levy_integral();
    if (!std::isfinite(check))
        throw DomainError("LevyMeasure: ∫ 1∧x² ν(dx) diverges");
    return m;
}

double LevyMeasure::density_at(double x) const {
    if (kind_ != Kind::density) return 0.0;
    if (x == 0.0) throw DomainError("LevyMeasure: density evaluated at 0");
    if (x > 0.0 && !pos_) return 0.0;
    if (x < 0.0 && !neg_) return 0.0;
    return rho_(x);
}

double LevyMeasure::total_mass() const {
    if (kind_ == Kind::zero) return 0.0;
    if (kind_ == Kind::atoms) {
        double s = 0.0;
        for (const auto& a : atoms_) s += a.mass;
        return s;
    }
    if (!finite_activity_)
        throw DomainError("LevyMeasure: total mass of an infinite-activity measure");
    double s = 0.0;
    for (int side : {+1, -1}) {
        if ((side > 0 && !pos_) || (side < 0 && !neg_)) continue;
        auto f = [&](double x) { return rho_(side * x); };
        s += quad::classified_value(quad::classify_lower(f, 1.0), "total_mass");
        s += quad::classified_value(quad::classify_upper(f, 1.0), "total_mass");
    }
    return s;
}

std::function<double(rng::CellRng&)> LevyMeasure::exact_jump_sampler() const {
    if (kind_ == Kind::atoms) {
        double total = 0.0;
        for (const auto& a : atoms_) total += a.mass;
        auto atoms = atoms_;
        return [atoms, total](rng::CellRng& rng) {
            double u = rng.uniform() * total;
            for (const auto& a : atoms) {
                u -= a.mass;
                if (u <= 0.0) return a.x;
            }
            return atoms.back().x;
        };
    }
    return exact_sampler_;
}

// Integrates payoff(x) rho(side x) over magnitudes x in (0, b], classified.
quad::Classified side_lower(const LevyMeasure& m, int side,
                            const std::function<double(double)>& payoff, double b) {
    auto f = [&](double x) { return payoff(x) * m.density_at(side * x); };
    return quad::classify_lower(f, b);
}

quad::Classified side_upper(const LevyMeasure& m, int side,
                            const std::function<double(double)>& payoff, double a) {
    auto f = [&](double x) { return payoff(x) * m.density_at(side * x); };
    return quad::classify_upper(f, a);
}

double LevyMeasure::trunc_quadratic(double r) const {
    if (kind_ == Kind::zero || r == 0.0) return 0.0;
    const double r2 = r * r;
    if (kind_ == Kind::atoms) {
        double s = 0.0;
        for (const auto& a : atoms_) s += a.mass * std::min(1.0, r2 * a.x * a.x);
        return s;
    }
    const double m = 1.0 / std::abs(r);
    double total = 0.0;
    for (int side : {+1, -1}) {
        if ((side > 0 && !pos_) || (side < 0 && !neg_)) continue;
        auto quadratic = [&](double x) { return r2 * x * x; };
        const double b1 = std::min(m, 1.0);
        total += quad::classified_value(side_lower(*this, side, quadratic, b1),
                                        "trunc_quadratic near 0");
        if (m > 1.0) {
            auto f = [&](double x) { return r2 * x * x * density_at(side * x); };
            total += checked(geometric_adaptive(f, 1.0, m), "trunc_quadratic middle");
        }
        total += quad::classified_value(
            side_upper(*this, side, [](double) { return 1.0; }, m),
            "trunc_quadratic tail");
    }
    return total;
}

double LevyMeasure::psi_p_jump(double r, double p) const {
    if (p == 0.0) return trunc_quadratic(r);
    if (kind_ == Kind::zero || r == 0.0) return 0.0;
    const double ar = std::abs(r);
    if (kind_ == Kind::atoms) {
        double s = 0.0;
        for (const auto& a : atoms_) {
            const double v = std::abs(r * a.x);
            s += a.mass * (v > 1.0 ? std::pow(v, p) : v * v);
        }
        return s;
    }
    const double m = 1.0 / ar;
    double total = 0.0;
    for (int side : {+1, -1}) {
        if ((side > 0 && !pos_) || (side < 0 && !neg_)) continue;
        auto quadratic = [&](double x) { return r * r * x * x; };
        const double b1 = std::min(m, 1.0);
        total += quad::classified_value(side_lower(*this, side, quadratic, b1),
                                        "psi_p_jump near 0");
        if (m > 1.0) {
            auto f = [&](double x) { return r * r * x * x * density_at(side * x); };
            total += checked(geometric_adaptive(f, 1.0, m), "psi_p_jump middle");
        }
        auto tail_payoff = [&](double x) { return std::pow(ar * x, p); };
        total += quad::classified_value(side_upper(*this, side, tail_payoff, m),
                                        "psi_p_jump tail (p-moment)");
    }
    return total;
}

// ν(|x| > u) restricted to one side.
double LevyMeasure::mass_above(double u) const {
    if (!(u > 0.0)) throw DomainError("mass_above: u must be > 0");
    if (kind_ == Kind::zero) return 0.0;
    if (kind_ == Kind::atoms) {
        double s = 0.0;
        for (const auto& a : atoms_)
            if (std::abs(a.x) > u) s += a.mass;
        return s;
    }
    double total = 0.0;
    for (int side : {+1, -1}) {
        if ((side > 0 && !pos_) || (side < 0 && !neg_)) continue;
        total += quad::classified_value(
            side_upper(*this, side, [](double) { return 1.0; }, u), "mass_above");
    }
    return total;
}

double LevyMeasure::mass_interval(double lo, double hi) const {
    if (!(hi > lo)) throw DomainError("mass_interval: requires lo < hi");
    if (kind_ == Kind::zero) return 0.0;
    if (kind_ == Kind::atoms) {
        double s = 0.0;
        for (const auto& a : atoms_)
            if (a.x > lo && a.x <= hi) s += a.mass;
        return s;
    }
    if (lo < 0.0 && hi > 0.0 && !finite_activity_) return kInf;
    double total = 0.0;
    // positive part (max(lo,0), hi]
    if (hi > 0.0 && pos_) {
        const double a = std::max(lo, 0.0);
        auto f = [&](double x) { return density_at(x); };
        if (a == 0.0) {
            auto c = quad::classify_lower(f, hi);
            if (c.verdict == quad::Verdict::divergent) return kInf;
            total += quad::classified_value(c, "mass_interval");
        } else {
            total += checked(geometric_adaptive(f, a, hi), "mass_interval");
        }
    }
    // negative part [lo, min(hi,0)) by magnitude
    if (lo < 0.0 && neg_) {
        const double b = -lo, a = std::max(-hi, 0.0);
        auto f = [&](double x) { return density_at(-x); };
        if (a == 0.0) {
            auto c = quad::classify_lower(f, b);
            if (c.verdict == quad::Verdict::divergent) return kInf;
            total += quad::classified_value(c, "mass_interval");
        } else {
            total += checked(geometric_adaptive(f, a, b), "mass_interval");
        }
    }
    return total;
}

double LevyMeasure::var_below(double u) const {
    if (!(u > 0.0)) throw DomainError("var_below: u must be > 0");
    if (kind_ == Kind::zero) return 0.0;
    if (kind_ == Kind::atoms) {
        double s = 0.0;
        for (const auto& a : atoms_)
            if (std::abs(a.x) <= u) s += a.mass * a.x * a.x;
        return s;
    }
    double total = 0.0;
    for (int side : {+1, -1}) {
        if ((side > 0 && !pos_) || (side < 0 && !neg_)) continue;
        auto payoff = [](double x) { return x * x; };
        total += quad::classified_value(side_lower(*this, side, payoff, u),
                                        "var_below");
    }
    return total;
}

double LevyMeasure::tau_mean_above(double eps) const {
    if (!(eps > 0.0)) throw DomainError("tau_mean_above: eps must be > 0");
    if (kind_ == Kind::zero) return 0.0;
    if (kind_ == Kind::atoms) {
        double s = 0.0;
        for (const auto& a : atoms_)
            if (std::abs(a.x) > eps) s += a.mass * truncate(a.x);
        return s;
    }
    double total = 0.0;
    for (int side : {+1, -1}) {
        if ((side > 0 && !pos_) || (side < 0 && !neg_)) continue;
        const double m = std::max(eps, 1.0);
        if (eps < 1.0) {
            auto f = [&](double x) { return x * density_at(side * x); };
            total += side * checked(geometric_adaptive(f, eps, 1.0), "tau_mean_above");
        }
        total += side * quad::classified_value(
                            side_upper(*this, side, [](double) { return 1.0; }, m),
                            "tau_mean_above tail");
    }
    return total;
}

quad::Classified LevyMeasure::mean_jump_excess() const {
    if (kind_ == Kind::zero) return {quad::Verdict::finite, 0.0, 0.0, 0, 0};
    if (kind_ == Kind::atoms) {
        double s = 0.0;
        for (const auto& a : atoms_) s += a.mass * (a.x - truncate(a.x));
        return {quad::Verdict::finite, s, 0.0, 0, 0};
    }
    quad::Classified out{quad::Verdict::finite, 0.0, 0.0, 0, 0};
    for (int side : {+1, -1}) {
        if ((side > 0 && !pos_) || (side < 0 && !neg_)) continue;
        auto payoff = [](double x) { return x - 1.0; };
        auto c = side_upper(*this, side, payoff, 1.0);
        out.evals += c.evals;
        if (c.verdict != quad::Verdict::finite) {
            out.verdict = c.verdict;
            return out;
        }
        out.value += side * c.value;
        out.abs_error += c.abs_error;
    }
    return out;
}

double LevyMeasure::tau_compensator(double r) const {
    if (kind_ == Kind::zero || r == 0.0) return 0.0;
    if (kind_ == Kind::atoms) {
        double s = 0.0;
        for (const auto& a : atoms_)
            s += a.mass * (truncate(a.x * r) - r * truncate(a.x));
        return s;
    }
    const double ar = std::abs(r);
    const double m0 = std::min(1.0, 1.0 / ar); // integrand vanishes on (0, m0]
    const double m1 = std::max(1.0, 1.0 / ar);
    double total = 0.0;
    for (int side : {+1, -1}) {
        if ((side > 0 && !pos_) || (side < 0 && !neg_)) continue;
        auto f = [&](double x) {
            const double xi = side * x;
            return (truncate(xi * r) - r * truncate(xi)) * density_at(xi);
        };
        total += checked(geometric_adaptive(f, m0, m1), "tau_compensator middle");
        // beyond m1 both truncations saturate: integrand is constant
        const double c = (r > 0.0 ? side : -side) - r * side;
        if (c != 0.0)
            total += c * quad::classified_value(
                             side_upper(*this, side, [](double) { return 1.0; }, m1),
                             "tau_compensator tail");
    }
    return total;
}

std::complex<double> LevyMeasure::exp_compensated(double z, double* abs_error) const {
    if (abs_error) *abs_error = 0.0;
    if (kind_ == Kind::zero || z == 0.0) return {0.0, 0.0};
    if (z < 0.0) return std::conj(exp_compensated(-z, abs_error));
    if (kind_ == Kind::atoms) {
        std::complex<double> s{0.0, 0.0};
        for (const auto& a : atoms_) {
            s += a.mass * (std::complex<double>{std::cos(z * a.x) - 1.0,
                                                std::sin(z * a.x) - z * truncate(a.x)});
        }
        return s;
    }
    const double w = z;
    const double x1 = std::min(1.0, 1.0 / w);
    double re = 0.0, im = 0.0, err = 0.0;
    for (int side : {+1, -1}) {
        if ((side > 0 && !pos_) || (side < 0 && !neg_)) continue;
        // (0, x1]: fixed-sign integrands, geometric panels toward 0
        {
            auto fre = [&](double x) {
                return (1.0 - std::cos(w * x)) * density_at(side * x);
            };
            auto c = quad::classify_lower(fre, x1);
            re -= quad::classified_value(c, "exp_compensated re near 0");
            err += c.abs_error;
            auto fim = [&](double x) {
                return (w * x - std::sin(w * x)) * density_at(side * x);
            };
            c = quad::classify_lower(fim, x1);
            im -= side * quad::classified_value(c, "exp_compensated im near 0");
            err += c.abs_error;
        }
        // [x1, X]: oscillatory middle; X chosen so the remainder correction
        // 2 rho(X)/w (van der Corput bound for monotone tails) is small and
        // the oscillation count stays within the panel budget.
        double X = std::max({2.0 * x1, 2.0, tail_.from});
        const double osc_cap = x1 + 6000.0 * M_PI / w;
        while (X < osc_cap && tail_.envelope(X) * 4.0 / w > 1e-13 &&
               X < tail_.cutoff(1e-16))
            X *= 2.0;
        X = std::min(X, std::max(osc_cap, 4.0));
        {
            quad::Options opt;
            opt.max_panels = 8000;
            auto fre = [&](double x) {
                return (std::cos(w * x) - 1.0) * density_at(side * x);
            };
            auto r1 = quad::adaptive_split(fre, x1, X, {1.0, 1.0 / w}, opt);
            re += checked(r1, "exp_compensated re middle");
            err += r1.abs_error;
            auto fim = [&](double x) {
                return (std::sin(w * x) - w * truncate(x)) * density_at(side * x);
            };
            auto r2 = quad::adaptive_split(fim, x1, X, {1.0, 1.0 / w}, opt);
            im += side * checked(r2, "exp_compensated im middle");
            err += r2.abs_error;
        }
        // beyond X: -1 and -z τ parts integrate against the tail mass; the
        // oscillatory residue is bounded by 2 rho(X)/w per component.
        const double tail_mass = quad::classified_value(
            side_upper(*this, side, [](double) { return 1.0; }, X),
            "exp_compensated tail mass");
        re -= tail_mass;
        im -= side * w * tail_mass;
        err += 4.0 * density_at(side * X) / w;
    }
    if (abs_error) *abs_error = err;
    return {re, im};
}

quad::Classified LevyMeasure::log_moment_above_one() const {
    if (kind_ == Kind::zero) return {quad::Verdict::finite, 0.0, 0.0, 0, 0};
    if (kind_ == Kind::atoms) {
        double s = 0.0;
        for (const auto& a : atoms_)
            if (std::abs(a.x) > 1.0) s += a.mass * std::log(std::abs(a.x));
        return {quad::Verdict::finite, s, 0.0, 0, 0};
    }
    auto payoff = [](double x) { return std::log(x); };
    quad::Classified pos{quad::Verdict::finite, 0.0, 0.0, 0, 0}, neg = pos;
    if (pos_) pos = side_upper(*this, +1, payoff, 1.0);
    if (neg_) neg = side_upper(*this, -1, payoff, 1.0);
    return combine({pos, neg});
}

quad::Classified LevyMeasure::power_moment_above_one(double p) const {
    if (kind_ == Kind::zero) return {quad::Verdict::finite, 0.0, 0.0, 0, 0};
    if (kind_ == Kind::atoms) {
        double s = 0.0;
        for (const auto& a : atoms_)
            if (std::abs(a.x) > 1.0) s += a.mass * std::pow(std::abs(a.x), p);
        return {quad::Verdict::finite, s, 0.0, 0, 0};
    }
    auto payoff = [p](double x) { return std::pow(x, p); };
    quad::Classified pos{quad::Verdict::finite, 0.0, 0.0, 0, 0}, neg = pos;
    if (pos_) pos = side_upper(*this, +1, payoff, 1.0);
    if (neg_) neg = side_upper(*this, -1, payoff, 1.0);
    return combine({pos, neg});
}

quad::Classified LevyMeasure::square_log_moment_below_one() const {
    if (kind_ == Kind::zero) return {quad::Verdict::finite, 0.0, 0.0, 0, 0};
    if (kind_ == Kind::atoms) {
        double s = 0.0;
        for (const auto& a : atoms_)
            if (std::abs(a.x) <= 1.0)
                s += a.mass * a.x * a.x * std::abs(std::log(std::abs(a.x)));
        return {quad::Verdict::finite, s, 0.0, 0, 0};
    }
    auto payoff = [](double x) { return x * x * std::abs(std::log(x)); };
    quad::Classified pos{quad::Verdict::finite, 0.0, 0.0, 0, 0}, neg = pos;
    if (pos_) pos = side_lower(*this, +1, payoff, 1.0);
    if (neg_) neg = side_lower(*this, -1, payoff, 1.0);
    return combine({pos, neg});
}

quad::Classified LevyMeasure::power_moment_below_one(double p) const {
    if (kind_ == Kind::zero) return {quad::Verdict::finite, 0.0, 0.0, 0, 0};
    if (kind_ == Kind::atoms) {
        double s = 0.0;
        for (const auto& a : atoms_)
            if (std::abs(a.x) <= 1.0) s += a.mass * std::pow(std::abs(a.x), p);
        return {quad::Verdict::finite, s, 0.0, 0, 0};
    }
    auto payoff = [p](double x) { return std::pow(x, p); };
    quad::Classified pos{quad::Verdict::finite, 0.0, 0.0, 0, 0}, neg = pos;
    if (pos_) pos = side_lower(*this, +1, payoff, 1.0);
    if (neg_) neg = side_lower(*this, -1, payoff, 1.0);
    return combine({pos, neg});
}

// ----------------------------------------------------- named families ----

LevyMeasure LevyMeasure::compound_poisson_atoms(double rate, std::vector<Atom> law) {
    if (!(rate > 0.0)) throw DomainError("compound_poisson: rate must be > 0");
    if (law.empty()) throw DomainError("compound_poisson: empty jump law");
    double weight = 0.0;
    for (const auto& a : law) weight += a.mass;
    if (!(weight > 0.0)) throw DomainError("compound_poisson: zero total weight");
    for (auto& a : law) a.mass *= rate / weight;
    auto m = atoms(std::move(law));
    m.label_ = "compound_poisson(atoms)";
    return m;
}

LevyMeasure LevyMeasure::compound_poisson_normal(double rate, double mean,
                                                 double stddev) {
    if (!(rate > 0.0) || !(stddev > 0.0))
        throw DomainError("compound_poisson_normal: rate and stddev must be > 0");
    const double amp = rate / (stddev * std::sqrt(2.0 * M_PI));
    DensitySpec spec;
    spec.rho = [amp, mean, stddev](double x) {
        const double u = (x - mean) / stddev;
        return amp * std::exp(-0.5 * u * u);
    };
    spec.positive_side = spec.negative_side = true;
    spec.beta = 0.0;
    // bound the gaussian tail by an exponential envelope from |mean| + 2σ on
    const double from = std::abs(mean) + 2.0 * stddev;
    const double r = 2.0 / stddev;
    spec.tail = Tail::exponential(amp * std::exp(-2.0 + r * from), r, from);
    spec.symmetric = mean == 0.0;
    spec.finite_activity = true;
    spec.exact_sampler = [mean, stddev](rng::CellRng& g) {
        return mean + stddev * g.normal();
    };
    spec.label = "compound_poisson(normal)";
    return density(std::move(spec));
}

LevyMeasure LevyMeasure::compound_poisson_two_sided_exponential(double rate,
                                                                double decay) {
    if (!(rate > 0.0) || !(decay > 0.0))
        throw DomainError("compound_poisson_two_sided_exponential: parameters > 0");
    const double amp = 0.5 * rate * decay;
    DensitySpec spec;
    spec.rho = [amp, decay](double x) { return amp * std::exp(-decay * std::abs(x)); };
    spec.positive_side = spec.negative_side = true;
    spec.beta = 0.0;
    spec.tail = Tail::exponential(amp, decay, 1.0);
    spec.symmetric = true;
    spec.finite_activity = true;
    spec.exact_sampler = [decay](rng::CellRng& g) {
        const double mag = -std::log(g.uniform()) / decay;
        return g.uniform() < 0.5 ? mag : -mag;
    };
    spec.label = "compound_poisson(two_sided_exponential)";
    return density(std::move(spec));
}

LevyMeasure LevyMeasure::gamma_subordinator(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0))
        throw DomainError("gamma_subordinator: shape and rate must be > 0");
    DensitySpec spec;
    spec.rho = [shape, rate](double x) { return shape * std::exp(-rate * x) / x; };
    spec.positive_side = true;
    spec.negative_side = false;
    spec.beta = 1.0;
    spec.tail = Tail::exponential(shape, rate, 1.0);
    spec.symmetric = false;
    spec.finite_activity = false;
    spec.label = "gamma_subordinator";
    return density(std::move(spec));
}

LevyMeasure LevyMeasure::alpha_stable(double index, double skew, double scale) {
    if (!(index > 0.0 && index < 2.0))
        throw DomainError("alpha_stable: index must be in (0, 2)");
    if (skew < -1.0 || skew > 1.0)
        throw DomainError("alpha_stable: skew must be in [-1, 1]");
    if (!(scale > 0.0)) throw DomainError("alpha_stable: scale must be > 0");
    const double cp = scale * 0.5 * (1.0 + skew);
    const double cm = scale * 0.5 * (1.0 - skew);
    DensitySpec spec;
    spec.rho = [cp, cm, index](double x) {
        return (x > 0.0 ? cp : cm) * std::pow(std::abs(x), -1.0 - index);
    };
    spec.positive_side = cp > 0.0;
    spec.negative_side = cm > 0.0;
    spec.beta = 1.0 + index;
    spec.tail = Tail::power(std::max(cp, cm), 1.0 + index, 1.0);
    spec.symmetric = skew == 0.0;
    spec.finite_activity = false;
    spec.label = "alpha_stable";
    return density(std::move(spec));
}

// ---------------------------------------------------------- LevyTriplet ----

LevyTriplet::LevyTriplet(double gamma, double b, LevyMeasure nu)
    : gamma_(gamma), b_(b), nu_(std::move(nu)) {
    if (!(b >= 0.0)) throw DomainError("LevyTriplet: b must be >= 0");
}

std::string LevyTriplet::label() const {
    std::ostringstream os;
    os << "(gamma=" << gamma_ << ", b=" << b_ << ", nu=" << nu_.label() << ")";
    return os.str();
}

std::optional<double> LevyTriplet::mean() const {
    auto excess = nu_.mean_jump_excess();
    if (excess.verdict != quad::Verdict::finite) return std::nullopt;
    return gamma_ + excess.value;
}

std::complex<double> cumulant_psi(const LevyTriplet& t, double z) {
    if (z == 0.0) return {0.0, 0.0};
    std::complex<double> psi{-0.5 * t.b() * z * z, t.gamma() * z};
    psi += t.nu().exp_compensated(z);
    return psi;
}

} // namespace ctma
