#ifndef CTMA_KERNELS_HPP
#define CTMA_KERNELS_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctma/levy.hpp"

namespace ctma {

enum class Support { causal, anticausal, two_sided };

/// Companion-form state space of a CARMA(p, q) kernel g(s) = b' e^{As} e_p.
/// a(λ) = λ^p + a_1 λ^{p-1} + ... + a_p, b(λ) = b_0 + b_1 λ + ... + b_q λ^q
/// with q < p and b_q ≠ 0. The companion matrix has ones on the
/// superdiagonal and last row (-a_p, -a_{p-1}, ..., -a_1).
class CarmaStructure {
public:
    CarmaStructure(std::vector<double> a, std::vector<double> b);

    int p() const { return p_; }
    int q() const { return q_; }
    const std::vector<double>& a_coeffs() const { return a_; } // a_1..a_p
    const std::vector<double>& b_coeffs() const { return b_; } // b_0..b_{p-1}, padded
    /// Row-major p×p companion matrix.
    const std::vector<double>& companion() const { return A_; }
    const std::vector<std::complex<double>>& a_roots() const { return a_roots_; }
    const std::vector<std::complex<double>>& b_roots() const { return b_roots_; }
    /// All a-roots strictly in the open left half-plane.
    bool stationary() const { return stationary_; }
    /// Transfer function b(-iξ)/a(-iξ) — the unnormalized frequency response.
    std::complex<double> transfer(double xi) const;
    /// Kernel value b' e^{As} e_p for s > 0 (0 otherwise).
    double kernel_value(double s) const;

private:
    int p_, q_;
    std::vector<double> a_, b_, A_;
    std::vector<std::complex<double>> a_roots_, b_roots_;
    bool stationary_;
};

/// Deterministic CTMA kernel. Built-in families carry closed-form Fourier
/// transforms and integrability rules; custom kernels carry whatever
/// metadata the constructor was given.
class Kernel {
public:
    enum class Family { ou, gamma, carma, anticipating_ou, custom };

    struct CustomSpec {
        std::function<double(double)> f;
        Support support = Support::causal;
        double lo = 0.0;  // support bounds; ±inf allowed on the unbounded end
        double hi = 0.0;
        double singularity_exponent = 0.0; // f ~ C |s|^σ toward the origin
        Tail tail = Tail::compact(1.0);    // decay toward the unbounded end
        std::string label = "custom";
    };

    static Kernel ou(double lambda);
    static Kernel gamma(double alpha);
    static Kernel carma(std::vector<double> a, std::vector<double> b);
    static Kernel anticipating_ou();
    static Kernel custom(CustomSpec spec);
    /// The window 1_{(a, b]} as a custom kernel.
    static Kernel indicator(double a, double b);

    Family family() const { return family_; }
    Support support() const { return support_; }
    bool causal() const { return support_ == Support::causal; }
    double singularity_exponent() const { return sing_; }
    std::string label() const { return label_; }

    double ou_lambda() const { return lambda_; }
    double gamma_alpha() const { return alpha_; }
    const CarmaStructure* carma_structure() const { return carma_.get(); }

    /// Kernel value; 0 outside the declared support.
    double operator()(double s) const;

    /// ∫_a^b f(u) du, exact per family (incomplete gamma for the gamma
    /// kernel, matrix exponentials for CARMA).
    double integral(double a, double b) const;

    /// Closed-form Fourier transform in the convention
    /// f̂(ξ) = (2π)^{-1/2} ∫ f(s) e^{iξs} ds. Custom kernels use a gridded
    /// discrete transform (grid_dt cells, support truncated at |f| < 1e-12).
    std::complex<double> fourier(double xi, double grid_dt = 1e-3) const;

    /// Smallest H such that |f| < eps outside [-H, H].
    double horizon(double eps = 1e-12) const;
    /// Default convolution warmup: twice the 1e-12 horizon.
    double default_warmup() const;

    struct LagWeights {
        std::vector<double> w;  // w[i]: cell average over [k dt, (k+1) dt), k = first_lag + i
        std::int64_t first_lag = 0;
    };
    /// Cell-averaged weights covering the support out to `horizon`.
    LagWeights cell_average_weights(double dt, double horizon) const;

private:
    Kernel() = default;
    Family family_ = Family::custom;
    Support support_ = Support::causal;
    double lambda_ = 0.0, alpha_ = 0.0;
    std::shared_ptr<const CarmaStructure> carma_;
    std::function<double(double)> f_;
    double lo_ = 0.0, hi_ = 0.0;
    double sing_ = 0.0;
    Tail tail_ = Tail::compact(1.0);
    std::string label_;
};

/// Quadrature route to f̂(ξ) in the same convention as Kernel::fourier,
/// independent of the closed forms (validation oracle).
std::complex<double> numeric_fourier(const Kernel& kernel, double xi,
                                     double eps_truncation = 1e-12);

struct InvertibilityReport {
    bool invertible = false;
    bool certificate = false; // closed-form argument vs numeric scan
    std::string evidence;
    std::vector<std::complex<double>> b_roots; // CARMA
    double min_ft_modulus = 0.0; // custom scan
    double min_ft_location = 0.0;
};

/// Theorem-3.1-style predicate: does the Fourier transform vanish on ℝ?
/// Built-in families are decided in closed form; custom kernels get a
/// non-vanishing scan over [-xi_max, xi_max] (a report, not a proof).
InvertibilityReport is_invertible(const Kernel& kernel, double xi_max = 20.0,
                                  double xi_step = 0.01);

struct RuleVerdict {
    bool member = false;
    std::string rule;
    bool log_moment_finite = false;
    double log_moment_value = 0.0;
    std::optional<double> branch_integral; // the 2(b)/2(c) defining integral
    std::optional<bool> carma_stationary;
};

/// Closed-form integrability rules per kernel family (log-moment tests,
/// the three-branch gamma-kernel criterion, the CARMA stationarity
/// condition). nullopt for custom kernels.
std::optional<RuleVerdict> integrability_rule(const Kernel& kernel,
                                              const LevyTriplet& triplet);

} // namespace ctma

#endif
