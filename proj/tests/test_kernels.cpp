#include <cmath>
#include <complex>

#include <doctest.h>

#include "ctma/kernels.hpp"
#include "ctma/quadrature.hpp"
#include "ctma/special.hpp"

using namespace ctma;

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
}

TEST_CASE("kernel evaluation per family") {
    CHECK(Kernel::gamma(1.0)(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(Kernel::ou(2.0)(-1.0) == 0.0);
    CHECK(Kernel::ou(2.0)(0.5) == doctest::Approx(std::exp(-1.0)));
    const auto c = Kernel::carma({1.0}, {3.0});
    CHECK(c(2.0) == doctest::Approx(3.0 * std::exp(-2.0)).epsilon(1e-12));
    CHECK(c(-0.5) == 0.0);
    CHECK(Kernel::anticipating_ou()(-1.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(Kernel::anticipating_ou()(0.5) == 0.0);
    CHECK(Kernel::indicator(0.0, 1.0)(0.5) == 1.0);
    CHECK(Kernel::indicator(0.0, 1.0)(1.5) == 0.0);
}

TEST_CASE("carma(1,0) kernel equals scaled OU pointwise") {
    const auto c = Kernel::carma({1.7}, {2.5});
    const auto ou = Kernel::ou(1.7);
    for (double s = 0.25; s <= 30.0; s += 0.5)
        CHECK(c(s) == doctest::Approx(2.5 * ou(s)).epsilon(1e-12));
}

TEST_CASE("kernel parameter validation") {
    CHECK_THROWS_AS(Kernel::ou(0.0), DomainError);
    CHECK_THROWS_AS(Kernel::gamma(-1.0), DomainError);
    CHECK_THROWS_AS(Kernel::carma({1.0}, {1.0, 2.0}), DomainError); // q >= p
    CHECK_THROWS_AS(Kernel::indicator(1.0, 1.0), DomainError);
}

TEST_CASE("closed-form Fourier transforms") {
    // Gamma at ξ=0: Γ(α+1)/√(2π)
    for (double alpha : {-0.5, -0.3, 0.0, 1.0}) {
        const auto f0 = Kernel::gamma(alpha).fourier(0.0);
        CHECK(f0.real() ==
              doctest::Approx(std::tgamma(alpha + 1.0) * kInvSqrt2Pi).epsilon(1e-14));
        CHECK(f0.imag() == 0.0);
    }
    // Gamma α=0 coincides with OU λ=1; modulus 1/(√(2π)√(1+ξ²))
    for (double xi : {-3.0, 0.5, 11.0}) {
        const auto g = Kernel::gamma(0.0).fourier(xi);
        const auto o = Kernel::ou(1.0).fourier(xi);
        CHECK(std::abs(g - o) < 1e-14);
        CHECK(std::abs(g) ==
              doctest::Approx(kInvSqrt2Pi / std::sqrt(1.0 + xi * xi)).epsilon(1e-13));
    }
    // CARMA transfer function is the unnormalized b(-iξ)/a(-iξ)
    const auto c = Kernel::carma({1.0}, {1.0});
    CHECK(c.carma_structure()->transfer(0.0) == std::complex<double>(1.0, 0.0));
    CHECK(std::abs(c.fourier(0.0) - std::complex<double>(kInvSqrt2Pi, 0.0)) < 1e-14);
    // anticipating OU is the conjugate reflection of OU(1)
    for (double xi : {-2.0, 0.7}) {
        const auto a = Kernel::anticipating_ou().fourier(xi);
        const auto o = Kernel::ou(1.0).fourier(xi);
        CHECK(std::abs(a - std::conj(o)) < 1e-14);
    }
}

TEST_CASE("numeric Fourier transform matches closed forms") {
    for (double alpha : {-0.4, 0.3}) {
        const auto k = Kernel::gamma(alpha);
        for (double xi : {0.0, 1.0, -7.5, 18.0}) {
            const auto closed = k.fourier(xi);
            const auto numeric = numeric_fourier(k, xi);
            CHECK(std::abs(closed - numeric) <= 1e-6 * std::abs(closed));
        }
    }
    const auto ou = Kernel::ou(2.0);
    const auto closed = ou.fourier(5.0);
    CHECK(std::abs(closed - numeric_fourier(ou, 5.0)) <= 1e-8 * std::abs(closed));
}

TEST_CASE("invertibility predicates") {
    CHECK(is_invertible(Kernel::gamma(-0.3)).invertible);
    CHECK(is_invertible(Kernel::ou(5.0)).invertible);
    CHECK(is_invertible(Kernel::anticipating_ou()).invertible);

    // CARMA(2,1): a(λ) = (λ+2)(λ+3); b root at -1, 0, +1
    auto carma21 = [](double b_root) {
        return Kernel::carma({5.0, 6.0}, {-b_root, 1.0}); // b(λ) = λ − b_root
    };
    CHECK(is_invertible(carma21(-1.0)).invertible);
    CHECK(!is_invertible(carma21(0.0)).invertible);
    CHECK(is_invertible(carma21(1.0)).invertible);

    // purely imaginary b roots: b(λ) = 1 + λ² inside CARMA(3,2)
    const auto imag_roots = Kernel::carma({6.0, 11.0, 6.0}, {1.0, 0.0, 1.0});
    CHECK(!is_invertible(imag_roots).invertible);

    // common root of a and b: b(λ) = λ + 2 shares the root -2 with a
    const auto common = Kernel::carma({5.0, 6.0}, {2.0, 1.0});
    CHECK(!is_invertible(common).invertible);

    // rescaling a and b jointly does not change the verdict
    const auto base = Kernel::carma({5.0, 6.0}, {1.0, 1.0});
    const auto scaled = Kernel::carma({5.0, 6.0}, {3.0, 3.0});
    CHECK(is_invertible(base).invertible == is_invertible(scaled).invertible);

    // a window has Fourier zeros at multiples of 2π: the scan finds one
    const auto window = Kernel::indicator(0.0, 1.0);
    const auto rep = is_invertible(window);
    CHECK(!rep.certificate);
    CHECK(!rep.invertible);
}

TEST_CASE("integrability rules") {
    const LevyTriplet cp(0.0, 0.0, LevyMeasure::atoms({{1.0, 1.0}}));
    const LevyTriplet cp2(0.0, 0.0, LevyMeasure::atoms({{2.0, 1.0}}));
    const LevyTriplet gauss_b(0.0, 1.0, LevyMeasure::atoms({{1.0, 1.0}}));

    auto r = integrability_rule(Kernel::ou(1.0), cp);
    REQUIRE(r.has_value());
    CHECK(r->member);
    CHECK(r->log_moment_finite);

    r = integrability_rule(Kernel::gamma(0.2), cp);
    REQUIRE(r.has_value());
    CHECK(r->member);
    CHECK(r->rule.find("2(a)") != std::string::npos);

    // α = −1/2, B = 0, atom at 2: the |x| ≤ 1 integral is vacuous
    r = integrability_rule(Kernel::gamma(-0.5), cp2);
    REQUIRE(r.has_value());
    CHECK(r->member);
    CHECK(r->rule.find("2(b)") != std::string::npos);

    // α = −1/2 with B = 1 fails
    r = integrability_rule(Kernel::gamma(-0.5), gauss_b);
    REQUIRE(r.has_value());
    CHECK(!r->member);

    // non-stationary CARMA: a root at +0.1
    r = integrability_rule(Kernel::carma({-0.1}, {1.0}), cp);
    REQUIRE(r.has_value());
    CHECK(!r->member);
    REQUIRE(r->carma_stationary.has_value());
    CHECK(!*r->carma_stationary);

    // custom kernels have no rule
    CHECK(!integrability_rule(Kernel::indicator(0.0, 1.0), cp).has_value());
}

TEST_CASE("cell-averaged weights recover the integral") {
    const double dt = 1e-3;
    // OU: Σ w dt over a growing horizon → ∫_0^∞ e^{-λs} ds = 1/λ
    const auto ou = Kernel::ou(2.0);
    for (double H : {10.0, 20.0}) {
        const auto w = ou.cell_average_weights(dt, H);
        double sum = 0.0;
        for (double x : w.w) sum += x * dt;
        CHECK(sum == doctest::Approx(0.5 * (1.0 - std::exp(-2.0 * H))).epsilon(1e-10));
    }
    // Gamma with a singular origin: the first cell is the exact
    // incomplete-gamma integral and stays finite
    const double alpha = -0.4;
    const auto g = Kernel::gamma(alpha);
    const auto w = g.cell_average_weights(dt, 40.0);
    const double w0_oracle = special::lower_gamma(alpha + 1.0, dt) / dt;
    CHECK(w.w[0] == doctest::Approx(w0_oracle).epsilon(1e-12));
    double sum = 0.0;
    for (double x : w.w) sum += x * dt;
    CHECK(sum == doctest::Approx(std::tgamma(alpha + 1.0)).epsilon(1e-8));

    // anticausal weights cover negative lags
    const auto aw = Kernel::anticipating_ou().cell_average_weights(0.1, 5.0);
    CHECK(aw.first_lag == -50);
    double asum = 0.0;
    for (double x : aw.w) asum += x * 0.1;
    CHECK(asum == doctest::Approx(1.0 - std::exp(-5.0)).epsilon(1e-10));
}

TEST_CASE("singular gamma kernel mass near zero matches incomplete gamma") {
    for (double alpha : {-0.75, -0.5, -0.25}) {
        const auto k = Kernel::gamma(alpha);
        // oracle: substitution quadrature of ∫_0^1 e^{-s} s^α ds
        const double oracle =
            quad::adaptive_singular_lower(
                [&](double s) { return std::exp(-s) * std::pow(s, alpha); }, 0.0, 1.0,
                -alpha)
                .value;
        CHECK(k.integral(0.0, 1.0) == doctest::Approx(oracle).epsilon(1e-10));
    }
}

TEST_CASE("horizons") {
    CHECK(Kernel::ou(1.0).horizon(1e-12) ==
          doctest::Approx(std::log(1e12)).epsilon(1e-12));
    const auto g = Kernel::gamma(-0.5);
    const double H = g.horizon(1e-12);
    CHECK(g(H) == doctest::Approx(1e-12).epsilon(1e-6));
    CHECK(Kernel::indicator(0.0, 4.0).horizon() == doctest::Approx(4.0));
}
