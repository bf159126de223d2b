#include <cmath>

#include <doctest.h>

#include "ctma/invert.hpp"
#include "ctma/simulate.hpp"
#include "ctma/special.hpp"

using namespace ctma;

namespace {

SamplePath constant_path(double c, double t0, double dt, std::int64_t n) {
    SamplePath p;
    p.grid = {t0, dt, n};
    p.values.assign(static_cast<std::size_t>(n), c);
    return p;
}

} // namespace

TEST_CASE("langevin recovery functional identities") {
    const auto zero = constant_path(0.0, 0.0, 0.01, 500);
    auto r = langevin_recover(zero, 2.0);
    for (double v : r.recovered.values) CHECK(v == 0.0);

    const double c = 1.7, lambda = 3.0;
    const auto con = constant_path(c, 1.0, 0.01, 500);
    r = langevin_recover(con, lambda);
    for (std::size_t i = 0; i < r.recovered.values.size(); ++i) {
        const double t_elapsed = 0.01 * static_cast<double>(i);
        CHECK(r.recovered.values[i] ==
              doctest::Approx(lambda * c * t_elapsed).epsilon(1e-12));
    }
    CHECK_THROWS_AS(langevin_recover(constant_path(1.0, 0.0, 0.1, 1), 1.0),
                    DomainError);
}

TEST_CASE("langevin recovery is exact on linear paths") {
    // X = c + m t: trapezoid integrates linear functions exactly, so the
    // recovered increments match the identity with zero quadrature error
    const double c = 0.5, m = -0.3, lambda = 2.0, dt = 0.02;
    SamplePath x;
    x.grid = {0.0, dt, 300};
    x.values.resize(300);
    for (int i = 0; i < 300; ++i) x.values[i] = c + m * x.grid.time(i);
    const auto r = langevin_recover(x, lambda);
    double expect = 0.0;
    for (int i = 1; i < 300; ++i) {
        const double t0 = x.grid.time(i - 1), t1 = x.grid.time(i);
        expect += (x.values[i] - x.values[i - 1]) +
                  lambda * ((c + m * t0) + (c + m * t1)) * 0.5 * dt;
        CHECK(r.recovered.values[static_cast<std::size_t>(i)] ==
              doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("anticipating recovery functional identities") {
    const auto zero = constant_path(0.0, 0.0, 0.01, 300);
    auto r = anticipating_recover(zero);
    for (double v : r.recovered.values) CHECK(v == 0.0);

    const double c = -2.2;
    const auto con = constant_path(c, 0.5, 0.01, 300);
    r = anticipating_recover(con);
    for (std::size_t i = 0; i < r.recovered.values.size(); ++i) {
        const double t_elapsed = 0.01 * static_cast<double>(i);
        CHECK(r.recovered.values[i] == doctest::Approx(c * t_elapsed).epsilon(1e-12));
    }
}

TEST_CASE("k_alpha closed form against an independent Beta oracle") {
    // oracle: B(α+1, −α) through lgamma, an independent route
    for (double a : {-0.9, -0.75, -0.5, -0.25, -0.1}) {
        const double oracle = std::exp(std::lgamma(a + 1.0) + std::lgamma(-a));
        CHECK(k_alpha(a) == doctest::Approx(oracle).epsilon(1e-12));
    }
    CHECK(k_alpha(-0.5) == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(k_alpha(-1.0 / 3.0) ==
          doctest::Approx(2.0 * M_PI / std::sqrt(3.0)).epsilon(1e-12));
    // monotone growth toward 0⁻
    CHECK(k_alpha(-0.05) > k_alpha(-0.1));
    CHECK(k_alpha(-0.1) > k_alpha(-0.2));
    CHECK_THROWS_AS(k_alpha(0.0), DomainError);
    CHECK_THROWS_AS(k_alpha(0.3), DomainError);
    CHECK_THROWS_AS(k_alpha(-1.0), DomainError);
}

TEST_CASE("gamma_to_ou on constants") {
    const double alpha = -0.5;
    const auto x = constant_path(1.0, 0.0, 0.01, 6000);
    const auto y = gamma_to_ou(x, alpha, 40.0);
    // ∫_0^∞ e^{-u} u^{-α-1} du = Γ(−α); for α = −1/2 the ratio is 1/√π
    const double expect = std::tgamma(-alpha) / k_alpha(alpha);
    CHECK(expect == doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-12));
    for (double v : y.values) CHECK(v == doctest::Approx(expect).epsilon(1e-6));

    const auto zeros = gamma_to_ou(constant_path(0.0, 0.0, 0.01, 6000), alpha, 40.0);
    for (double v : zeros.values) CHECK(v == 0.0);
}

TEST_CASE("gamma_to_ou commutes with scaling") {
    const LevyTriplet t(0.0, 0.0, LevyMeasure::atoms({{1.0, 1.0}}));
    const auto inc = simulate_increments(t, {-40.0, 0.01, 9000}, 4);
    const auto x = simulate_ctma(Kernel::gamma(-0.5), inc, 30.0);
    SamplePath x3 = x;
    for (double& v : x3.values) v *= 3.0;
    const auto y = gamma_to_ou(x, -0.5, 20.0);
    const auto y3 = gamma_to_ou(x3, -0.5, 20.0);
    for (std::size_t i = 0; i < y.values.size(); ++i)
        CHECK(y3.values[i] == doctest::Approx(3.0 * y.values[i]).epsilon(1e-12));
}

TEST_CASE("gamma_to_ou domain and coverage errors") {
    const auto x = constant_path(1.0, 0.0, 0.01, 100);
    CHECK_THROWS_AS(gamma_to_ou(x, 0.3, 0.5), DomainError);
    CHECK_THROWS_AS(gamma_to_ou(x, -0.5, 39.0), HorizonError);
}

TEST_CASE("gamma_recover on a constant composes both identities") {
    const double alpha = -0.5, c = 2.0;
    const auto x = constant_path(c, 0.0, 0.01, 6000);
    const auto r = gamma_recover(x, alpha, 40.0);
    const double level = std::tgamma(-alpha) / k_alpha(alpha) * c;
    const auto& g = r.recovered.grid;
    for (std::size_t i = 0; i < r.recovered.values.size(); ++i) {
        const double elapsed = g.dt * static_cast<double>(i);
        CHECK(r.recovered.values[i] == doctest::Approx(level * elapsed).epsilon(1e-5));
    }
    CHECK(r.k_alpha_value == doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("recovery error metric") {
    IncrementPath truth;
    truth.grid = {0.0, 0.1, 100};
    truth.increments.assign(100, 0.0);
    truth.increments[50] = 2.5; // one jump

    RecoveryResult rec;
    rec.method = "manual";
    rec.recovered.grid = {0.0, 0.1, 101};
    rec.recovered.values.assign(101, 0.0);
    {
        const auto L = truth.cumulative();
        for (int i = 0; i <= 100; ++i) rec.recovered.values[i] = L[i];
    }
    auto err = recovery_error(truth, rec);
    CHECK(err.sup_error == 0.0);
    CHECK(err.rmse == 0.0);

    // a constant offset is removed by pinning
    for (auto& v : rec.recovered.values) v += 13.0;
    err = recovery_error(truth, rec);
    CHECK(err.sup_error == doctest::Approx(0.0));

    // the same jump arriving one cell late disagrees at exactly one node
    RecoveryResult shifted;
    shifted.method = "manual";
    shifted.recovered.grid = {0.0, 0.1, 101};
    shifted.recovered.values.assign(101, 0.0);
    for (int i = 52; i <= 100; ++i) shifted.recovered.values[i] = 2.5;
    err = recovery_error(truth, shifted);
    CHECK(err.sup_error == doctest::Approx(2.5));
    CHECK(err.rmse == doctest::Approx(2.5 / std::sqrt(101.0)).epsilon(1e-12));
}

TEST_CASE("mu mass diverges for alpha > 0 and converges for alpha < 0") {
    // α = +0.5: μ((c, H]) ~ c^{-1/2} grows without bound as c → 0
    const double m1 = mu_mass_above_cutoff(0.5, 1e-2, 40.0);
    const double m2 = mu_mass_above_cutoff(0.5, 1e-4, 40.0);
    const double m3 = mu_mass_above_cutoff(0.5, 1e-6, 40.0);
    CHECK(m2 / m1 > 5.0);
    CHECK(m3 / m2 > 5.0);
    // α = −0.5: total mass Γ(1/2) = √π
    const double c1 = mu_mass_above_cutoff(-0.5, 1e-6, 40.0);
    const double c2 = mu_mass_above_cutoff(-0.5, 1e-9, 40.0);
    CHECK(c1 == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-3));
    CHECK(c2 - c1 < 1e-3);
}
