#include "ctma/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "ctma/errors.hpp"
#include "ctma/quadrature.hpp"
#include "ctma/special.hpp"

namespace ctma {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs) {
    // coeffs are c_0..c_n for c_0 + c_1 λ + ... + c_n λ^n, c_n ≠ 0
    int n = static_cast<int>(coeffs.size()) - 1;
    while (n > 0 && coeffs[n] == 0.0) --n;
    if (n < 1) return {};
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -coeffs[i] / coeffs[n];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    std::vector<std::complex<double>> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()[i];
    return roots;
}

Eigen::MatrixXd companion_of(const std::vector<double>& a) {
    const int p = static_cast<int>(a.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(p, p);
    for (int i = 0; i + 1 < p; ++i) A(i, i + 1) = 1.0;
    for (int j = 0; j < p; ++j) A(p - 1, j) = -a[p - 1 - j]; // last row -a_p..-a_1
    return A;
}

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

} // namespace

// ------------------------------------------------------- CarmaStructure ----

CarmaStructure::CarmaStructure(std::vector<double> a, std::vector<double> b)
    : p_(static_cast<int>(a.size())), a_(std::move(a)) {
    if (p_ < 1) throw DomainError("carma: need p >= 1 autoregressive coefficients");
    if (b.empty()) throw DomainError("carma: need at least b_0");
    if (static_cast<int>(b.size()) > p_)
        throw DomainError("carma: requires q < p (deg b < deg a)");
    q_ = static_cast<int>(b.size()) - 1;
    while (q_ > 0 && b[q_] == 0.0) --q_;
    if (b[q_] == 0.0) throw DomainError("carma: b must not be identically zero");
    b_ = std::move(b);
    b_.resize(p_, 0.0);

    Eigen::MatrixXd A = companion_of(a_);
    A_.assign(A.data(), A.data() + p_ * p_); // column-major storage

    // a(λ) = λ^p + a_1 λ^{p-1} + ... + a_p  ->  coefficient list low..high
    std::vector<double> a_poly(p_ + 1);
    a_poly[p_] = 1.0;
    for (int i = 1; i <= p_; ++i) a_poly[p_ - i] = a_[i - 1];
    a_roots_ = polynomial_roots(a_poly);
    b_roots_ = polynomial_roots(std::vector<double>(b_.begin(), b_.begin() + q_ + 1));
    stationary_ = true;
    for (const auto& r : a_roots_)
        if (!(r.real() < 0.0)) stationary_ = false;
}

std::complex<double> CarmaStructure::transfer(double xi) const {
    const std::complex<double> z{0.0, -xi};
    std::vector<double> a_poly(p_ + 1);
    a_poly[p_] = 1.0;
    for (int i = 1; i <= p_; ++i) a_poly[p_ - i] = a_[i - 1];
    const auto den = horner(a_poly, z);
    if (std::abs(den) == 0.0)
        throw DomainError("carma transfer: a(-i xi) vanishes at this frequency");
    return horner(b_, z) / den;
}

double CarmaStructure::kernel_value(double s) const {
    if (!(s > 0.0)) return 0.0;
    Eigen::Map<const Eigen::MatrixXd> A(A_.data(), p_, p_);
    Eigen::MatrixXd E = (A * s).exp();
    double v = 0.0;
    for (int i = 0; i < p_; ++i) v += b_[i] * E(i, p_ - 1);
    return v;
}

// ---------------------------------------------------------------- Kernel ----

Kernel Kernel::ou(double lambda) {
    if (!(lambda > 0.0)) throw DomainError("ou kernel: lambda must be > 0");
    Kernel k;
    k.family_ = Family::ou;
    k.support_ = Support::causal;
    k.lambda_ = lambda;
    k.lo_ = 0.0;
    k.hi_ = kInf;
    k.sing_ = 0.0;
    k.tail_ = Tail::exponential(1.0, lambda, 0.0);
    k.label_ = "ou(lambda=" + std::to_string(lambda) + ")";
    return k;
}

Kernel Kernel::gamma(double alpha) {
    if (!(alpha > -1.0)) throw DomainError("gamma kernel: alpha must be > -1");
    Kernel k;
    k.family_ = Family::gamma;
    k.support_ = Support::causal;
    k.alpha_ = alpha;
    k.lo_ = 0.0;
    k.hi_ = kInf;
    k.sing_ = alpha;
    k.tail_ = Tail::exponential(std::max(1.0, std::pow(std::max(alpha, 1.0), alpha)),
                                alpha <= 0.0 ? 1.0 : 0.5, std::max(1.0, 2.0 * alpha));
    k.label_ = "gamma(alpha=" + std::to_string(alpha) + ")";
    return k;
}

Kernel Kernel::carma(std::vector<double> a, std::vector<double> b) {
    Kernel k;
    k.family_ = Family::carma;
    k.support_ = Support::causal;
    k.carma_ = std::make_shared<CarmaStructure>(std::move(a), std::move(b));
    k.lo_ = 0.0;
    k.hi_ = kInf;
    k.sing_ = 0.0;
    double rate = 1.0;
    if (k.carma_->stationary()) {
        rate = kInf;
        for (const auto& r : k.carma_->a_roots())
            rate = std::min(rate, -r.real());
        rate = std::max(0.5 * rate, 1e-6);
    }
    double scale = 0.0;
    for (double bi : k.carma_->b_coeffs()) scale += std::abs(bi);
    k.tail_ = Tail::exponential(std::max(scale * 10.0, 1.0), rate, 0.0);
    k.label_ = "carma(p=" + std::to_string(k.carma_->p()) +
               ",q=" + std::to_string(k.carma_->q()) + ")";
    return k;
}

Kernel Kernel::anticipating_ou() {
    Kernel k;
    k.family_ = Family::anticipating_ou;
    k.support_ = Support::anticausal;
    k.lo_ = -kInf;
    k.hi_ = 0.0;
    k.sing_ = 0.0;
    k.tail_ = Tail::exponential(1.0, 1.0, 0.0);
    k.label_ = "anticipating_ou";
    return k;
}

Kernel Kernel::custom(CustomSpec spec) {
    if (!spec.f) throw DomainError("custom kernel: evaluator required");
    Kernel k;
    k.family_ = Family::custom;
    k.support_ = spec.support;
    k.f_ = std::move(spec.f);
    k.lo_ = spec.lo;
    k.hi_ = spec.hi;
    k.sing_ = spec.singularity_exponent;
    k.tail_ = spec.tail;
    k.label_ = spec.label;
    return k;
}

Kernel Kernel::indicator(double a, double b) {
    if (!(b > a)) throw DomainError("indicator kernel: requires a < b");
    CustomSpec spec;
    spec.f = [a, b](double s) { return (s > a && s <= b) ? 1.0 : 0.0; };
    spec.support = a >= 0.0 ? Support::causal
                            : (b <= 0.0 ? Support::anticausal : Support::two_sided);
    spec.lo = a;
    spec.hi = b;
    spec.singularity_exponent = 0.0;
    spec.tail = Tail::compact(std::max(std::abs(a), std::abs(b)));
    spec.label = "indicator(" + std::to_string(a) + "," + std::to_string(b) + "]";
    return Kernel::custom(std::move(spec));
}

double Kernel::operator()(double s) const {
    switch (family_) {
        case Family::ou: return s >= 0.0 ? std::exp(-lambda_ * s) : 0.0;
        case Family::gamma:
            return s > 0.0 ? std::exp(-s) * std::pow(s, alpha_) : 0.0;
        case Family::carma: return carma_->kernel_value(s);
        case Family::anticipating_ou: return s <= 0.0 ? std::exp(s) : 0.0;
        case Family::custom:
            if (s < lo_ || s > hi_) return 0.0;
            return f_(s);
    }
    return 0.0;
}

double Kernel::integral(double a, double b) const {
    if (!(b > a)) return 0.0;
    switch (family_) {
        case Family::ou: {
            const double lo = std::max(a, 0.0);
            if (b <= lo) return 0.0;
            return (std::exp(-lambda_ * lo) - std::exp(-lambda_ * b)) / lambda_;
        }
        case Family::gamma: {
            const double lo = std::max(a, 0.0);
            if (b <= lo) return 0.0;
            return special::gamma_cell_integral(alpha_ + 1.0, lo, b);
        }
        case Family::carma: {
            const double lo = std::max(a, 0.0);
            if (b <= lo) return 0.0;
            const int p = carma_->p();
            Eigen::Map<const Eigen::MatrixXd> A(carma_->companion().data(), p, p);
            // ∫ e^{Au} du = A^{-1}(e^{Ab} - e^{Aa})
            Eigen::VectorXd ep = Eigen::VectorXd::Zero(p);
            ep(p - 1) = 1.0;
            Eigen::MatrixXd Eb = (A * b).exp();
            Eigen::MatrixXd Ea = (A * lo).exp();
            Eigen::VectorXd v = A.partialPivLu().solve((Eb - Ea) * ep);
            double out = 0.0;
            for (int i = 0; i < p; ++i) out += carma_->b_coeffs()[i] * v(i);
            return out;
        }
        case Family::anticipating_ou: {
            const double hi = std::min(b, 0.0);
            if (hi <= a) return 0.0;
            return std::exp(hi) - std::exp(a);
        }
        case Family::custom: {
            const double lo = std::max(a, lo_);
            const double hi = std::min(b, hi_);
            if (hi <= lo) return 0.0;
            // handle a possible integrable singularity where the support
            // touches the origin
            if (sing_ < 0.0 && support_ != Support::anticausal && lo <= 0.0 &&
                lo_ == 0.0) {
                auto res = quad::adaptive_singular_lower([this](double s) { return f_(s); },
                                                         0.0, hi, -sing_);
                return res.value;
            }
            if (sing_ < 0.0 && support_ == Support::anticausal && hi >= 0.0 &&
                hi_ == 0.0) {
                auto res = quad::adaptive_singular_upper([this](double s) { return f_(s); },
                                                         lo, 0.0, -sing_);
                return res.value;
            }
            return quad::adaptive([this](double s) { return f_(s); }, lo, hi).value;
        }
    }
    return 0.0;
}

std::complex<double> Kernel::fourier(double xi, double grid_dt) const {
    using namespace std::complex_literals;
    switch (family_) {
        case Family::ou:
            return kInvSqrt2Pi / std::complex<double>(lambda_, -xi);
        case Family::gamma: {
            const std::complex<double> base(1.0, -xi);
            return std::tgamma(alpha_ + 1.0) * kInvSqrt2Pi *
                   std::pow(base, -alpha_ - 1.0);
        }
        case Family::carma:
            return kInvSqrt2Pi * carma_->transfer(xi);
        case Family::anticipating_ou:
            return kInvSqrt2Pi / std::complex<double>(1.0, xi);
        case Family::custom: {
            // gridded discrete transform: cell integrals against midpoint phases
            const double H = horizon(1e-12);
            const double lo = std::max(lo_, -H);
            const double hi = std::min(hi_, H);
            std::complex<double> acc{0.0, 0.0};
            const auto cells = static_cast<std::int64_t>(std::ceil((hi - lo) / grid_dt));
            for (std::int64_t k = 0; k < cells; ++k) {
                const double a = lo + static_cast<double>(k) * grid_dt;
                const double b = std::min(a + grid_dt, hi);
                const double mid = 0.5 * (a + b);
                acc += integral(a, b) * std::exp(1i * (xi * mid));
            }
            return kInvSqrt2Pi * acc;
        }
    }
    return {0.0, 0.0};
}

double Kernel::horizon(double eps) const {
    switch (family_) {
        case Family::ou: return std::log(1.0 / eps) / lambda_;
        case Family::gamma: {
            // solve e^{-s} s^alpha = eps beyond the mode
            double lo = std::max(1.0, alpha_);
            double hi = std::max(4.0, 2.0 * lo);
            auto logf = [&](double s) { return -s + alpha_ * std::log(s); };
            const double target = std::log(eps);
            while (logf(hi) > target) hi *= 2.0;
            for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (lo + hi);
                (logf(mid) > target ? lo : hi) = mid;
            }
            return hi;
        }
        case Family::carma: {
            double s = 1.0;
            for (int i = 0; i < 80; ++i) {
                if (std::abs(carma_->kernel_value(s)) < eps &&
                    std::abs(carma_->kernel_value(1.17 * s)) < eps &&
                    std::abs(carma_->kernel_value(1.43 * s)) < eps)
                    return s;
                s *= 1.5;
            }
            throw DomainError("carma horizon: kernel does not decay (non-stationary?)");
        }
        case Family::anticipating_ou: return std::log(1.0 / eps);
        case Family::custom: {
            if (std::isfinite(lo_) && std::isfinite(hi_))
                return std::max(std::abs(lo_), std::abs(hi_));
            switch (tail_.kind) {
                case Tail::Kind::compact: return tail_.from;
                case Tail::Kind::exponential:
                    return std::max(tail_.from,
                                    std::log(std::max(tail_.coef / eps, 1.0)) / tail_.param);
                case Tail::Kind::power:
                    return std::max(tail_.from,
                                    std::pow(std::max(tail_.coef / eps, 1.0), 1.0 / tail_.param));
            }
            return tail_.from;
        }
    }
    return 0.0;
}

double Kernel::default_warmup() const { return 2.0 * horizon(1e-12); }

Kernel::LagWeights Kernel::cell_average_weights(double dt, double horizon) const {
    if (!(dt > 0.0)) throw DomainError("cell_average_weights: dt must be > 0");
    if (!(horizon > 0.0)) throw DomainError("cell_average_weights: horizon must be > 0");
    const auto cells = static_cast<std::int64_t>(std::llround(std::ceil(horizon / dt - 1e-9)));
    LagWeights out;
    if (family_ == Family::carma) {
        // recursion v_{k+1} = e^{A dt} v_k with v_0 = A^{-1}(e^{A dt} - I)e_p
        const int p = carma_->p();
        Eigen::Map<const Eigen::MatrixXd> A(carma_->companion().data(), p, p);
        Eigen::MatrixXd M = (A * dt).exp();
        Eigen::VectorXd ep = Eigen::VectorXd::Zero(p);
        ep(p - 1) = 1.0;
        Eigen::VectorXd v =
            A.partialPivLu().solve((M - Eigen::MatrixXd::Identity(p, p)) * ep);
        out.first_lag = 0;
        out.w.resize(cells);
        const auto& bc = carma_->b_coeffs();
        for (std::int64_t k = 0; k < cells; ++k) {
            double acc = 0.0;
            for (int i = 0; i < p; ++i) acc += bc[i] * v(i);
            out.w[k] = acc / dt;
            v = M * v;
        }
        return out;
    }
    auto cell = [&](std::int64_t k) {
        const double a = static_cast<double>(k) * dt;
        return integral(a, a + dt) / dt;
    };
    switch (support_) {
        case Support::causal:
            out.first_lag = 0;
            out.w.resize(cells);
            for (std::int64_t k = 0; k < cells; ++k) out.w[k] = cell(k);
            break;
        case Support::anticausal:
            out.first_lag = -cells;
            out.w.resize(cells);
            for (std::int64_t k = 0; k < cells; ++k) out.w[k] = cell(k - cells);
            break;
        case Support::two_sided:
            out.first_lag = -cells;
            out.w.resize(2 * cells);
            for (std::int64_t k = 0; k < 2 * cells; ++k) out.w[k] = cell(k - cells);
            break;
    }
    return out;
}

// ------------------------------------------------------- numeric Fourier ----

std::complex<double> numeric_fourier(const Kernel& kernel, double xi,
                                     double eps_truncation) {
    const double H = kernel.horizon(eps_truncation);
    quad::Options opt;
    opt.max_panels = 20000;
    opt.rel_tol = 1e-10;
    auto piece = [&](double lo, double hi, double sing_at_lo,
                     double sing_at_hi) -> std::complex<double> {
        if (hi <= lo) return {0.0, 0.0};
        auto fre = [&](double s) { return kernel(s) * std::cos(xi * s); };
        auto fim = [&](double s) { return kernel(s) * std::sin(xi * s); };
        double re, im;
        if (sing_at_lo > 0.0) {
            const double cut = std::min(lo + 0.5, hi);
            re = quad::adaptive_singular_lower(fre, lo, cut, sing_at_lo, opt).value +
                 quad::adaptive(fre, cut, hi, opt).value;
            im = quad::adaptive_singular_lower(fim, lo, cut, sing_at_lo, opt).value +
                 quad::adaptive(fim, cut, hi, opt).value;
        } else if (sing_at_hi > 0.0) {
            const double cut = std::max(hi - 0.5, lo);
            re = quad::adaptive(fre, lo, cut, opt).value +
                 quad::adaptive_singular_upper(fre, cut, hi, sing_at_hi, opt).value;
            im = quad::adaptive(fim, lo, cut, opt).value +
                 quad::adaptive_singular_upper(fim, cut, hi, sing_at_hi, opt).value;
        } else {
            re = quad::adaptive(fre, lo, hi, opt).value;
            im = quad::adaptive(fim, lo, hi, opt).value;
        }
        return {re, im};
    };
    const double p = std::max(0.0, -kernel.singularity_exponent());
    std::complex<double> acc{0.0, 0.0};
    switch (kernel.support()) {
        case Support::causal: acc = piece(0.0, H, p, 0.0); break;
        case Support::anticausal: acc = piece(-H, 0.0, 0.0, p); break;
        case Support::two_sided: acc = piece(-H, 0.0, 0.0, 0.0) + piece(0.0, H, 0.0, 0.0); break;
    }
    return kInvSqrt2Pi * acc;
}

// ---------------------------------------------------------- invertibility ----

InvertibilityReport is_invertible(const Kernel& kernel, double xi_max, double xi_step) {
    InvertibilityReport rep;
    switch (kernel.family()) {
        case Kernel::Family::ou:
        case Kernel::Family::gamma:
        case Kernel::Family::anticipating_ou:
            rep.invertible = true;
            rep.certificate = true;
            rep.evidence = "closed-form Fourier transform has no real zeros";
            return rep;
        case Kernel::Family::carma: {
            const auto* c = kernel.carma_structure();
            rep.b_roots = c->b_roots();
            rep.certificate = true;
            constexpr double tol = 1e-9; // root clustering tolerance
            bool roots_ok = true;
            for (const auto& r : rep.b_roots)
                if (std::abs(r.real()) <= tol) roots_ok = false;
            bool no_common = true;
            for (const auto& br : rep.b_roots)
                for (const auto& ar : c->a_roots())
                    if (std::abs(br - ar) <= tol) no_common = false;
            rep.invertible = roots_ok && no_common;
            if (!roots_ok)
                rep.evidence = "a root of b(λ) lies on the imaginary axis";
            else if (!no_common)
                rep.evidence = "a(λ) and b(λ) share a root";
            else
                rep.evidence =
                    "all roots of b(λ) have nonzero real part and gcd(a,b) is trivial";
            return rep;
        }
        case Kernel::Family::custom: {
            rep.certificate = false;
            double min_mod = kInf, max_mod = 0.0, at = 0.0;
            for (double xi = -xi_max; xi <= xi_max + 1e-12; xi += xi_step) {
                const double m = std::abs(kernel.fourier(xi));
                max_mod = std::max(max_mod, m);
                if (m < min_mod) {
                    min_mod = m;
                    at = xi;
                }
            }
            rep.min_ft_modulus = min_mod;
            rep.min_ft_location = at;
            rep.invertible = min_mod > 1e-6 * max_mod;
            rep.evidence = rep.invertible
                               ? "no zero detected on the scan grid (not a proof)"
                               : "scan found a near-zero of the Fourier transform";
            return rep;
        }
    }
    return rep;
}

// ------------------------------------------------------------ rule engine ----

std::optional<RuleVerdict> integrability_rule(const Kernel& kernel,
                                              const LevyTriplet& triplet) {
    if (kernel.family() == Kernel::Family::custom) return std::nullopt;

    RuleVerdict v;
    const auto logm = triplet.nu().log_moment_above_one();
    if (logm.verdict == quad::Verdict::inconclusive)
        throw QuadratureError("integrability_rule: log-moment inconclusive",
                              logm.value, logm.abs_error);
    v.log_moment_finite = logm.verdict == quad::Verdict::finite;
    v.log_moment_value = logm.value;

    switch (kernel.family()) {
        case Kernel::Family::ou:
        case Kernel::Family::anticipating_ou:
            v.member = v.log_moment_finite;
            v.rule = v.member ? "ou: finite log-moment"
                              : "ou: log-moment diverges";
            return v;
        case Kernel::Family::carma: {
            const bool stationary = kernel.carma_structure()->stationary();
            v.carma_stationary = stationary;
            if (!stationary) {
                v.member = false;
                v.rule = "carma: a(λ) has a root with nonnegative real part "
                         "(no stationary CTMA representation)";
                return v;
            }
            v.member = v.log_moment_finite;
            v.rule = v.member ? "carma: stationary and finite log-moment"
                              : "carma: log-moment diverges";
            return v;
        }
        case Kernel::Family::gamma:
            break;
        case Kernel::Family::custom:
            return std::nullopt;
    }

    // gamma kernel, Example-3.2-style branches
    const double alpha = kernel.gamma_alpha();
    if (!v.log_moment_finite) {
        v.member = false;
        v.rule = "gamma: log-moment diverges (condition 1 fails)";
        return v;
    }
    constexpr double half_tol = 1e-12;
    if (alpha > -0.5 + half_tol) {
        v.member = true;
        v.rule = "gamma: 2(a) alpha > -1/2";
        return v;
    }
    if (std::abs(alpha + 0.5) <= half_tol) {
        if (triplet.b() != 0.0) {
            v.member = false;
            v.rule = "gamma: 2(b) requires B = 0";
            return v;
        }
        const auto m = triplet.nu().square_log_moment_below_one();
        if (m.verdict == quad::Verdict::inconclusive)
            throw QuadratureError("gamma 2(b): integral inconclusive", m.value,
                                  m.abs_error);
        v.member = m.verdict == quad::Verdict::finite;
        if (v.member) v.branch_integral = m.value;
        v.rule = v.member ? "gamma: 2(b) B = 0 and ∫|x|²|log|x|| ν < ∞ on |x|≤1"
                          : "gamma: 2(b) ∫|x|²|log|x|| ν diverges on |x|≤1";
        return v;
    }
    // alpha in (-1, -1/2)
    if (triplet.b() != 0.0) {
        v.member = false;
        v.rule = "gamma: 2(c) requires B = 0";
        return v;
    }
    const double p = -1.0 / alpha;
    const auto m = triplet.nu().power_moment_below_one(p);
    if (m.verdict == quad::Verdict::inconclusive)
        throw QuadratureError("gamma 2(c): integral inconclusive", m.value,
                              m.abs_error);
    v.member = m.verdict == quad::Verdict::finite;
    if (v.member) v.branch_integral = m.value;
    v.rule = v.member ? "gamma: 2(c) B = 0 and ∫|x|^{-1/alpha} ν < ∞ on |x|≤1"
                      : "gamma: 2(c) ∫|x|^{-1/alpha} ν diverges on |x|≤1";
    return v;
}

} // namespace ctma
