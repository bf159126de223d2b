#include <cmath>
#include <vector>

#include <doctest.h>

#include "ctma/orlicz.hpp"
#include "ctma/rng.hpp"

using namespace ctma;

namespace {

const LevyTriplet gaussian_triplet{0.0, 1.0, LevyMeasure::zero()};
const LevyTriplet sym_atoms{0.0, 0.0, LevyMeasure::atoms({{1.0, 0.5}, {-1.0, 0.5}})};

Kernel scaled_ou(double c, double lambda) {
    Kernel::CustomSpec s;
    s.f = [c, lambda](double u) { return u >= 0.0 ? c * std::exp(-lambda * u) : 0.0; };
    s.support = Support::causal;
    s.lo = 0.0;
    s.hi = std::numeric_limits<double>::infinity();
    s.tail = Tail::exponential(std::abs(c), lambda, 0.0);
    s.label = "scaled_ou";
    return Kernel::custom(std::move(s));
}

} // namespace

TEST_CASE("h_function examples") {
    CHECK(h_function(sym_atoms, 0.5) == doctest::Approx(0.0));
    CHECK(h_function(sym_atoms, 4.0) == doctest::Approx(0.0));
    const LevyTriplet drift(1.0, 0.0, LevyMeasure::zero());
    for (double r : {0.25, -3.0}) CHECK(h_function(drift, r) == doctest::Approx(std::abs(r)));
    CHECK(h_function(drift, 0.0) == 0.0);
}

TEST_CASE("young function of a pure Gaussian is r^2") {
    const auto psi = young_psi(gaussian_triplet);
    CHECK(psi(2.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(psi(0.0) == 0.0);
    CHECK(psi(-3.0) == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("young function of symmetric unit atoms is 1 ∧ r^2") {
    const auto psi = young_psi(sym_atoms);
    CHECK(psi(0.5) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(psi(3.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(psi(0.0) == 0.0);
}

TEST_CASE("young function invariants on a log grid") {
    const LevyTriplet mixed(0.3, 0.5, LevyMeasure::atoms({{1.5, 0.7}, {-0.3, 0.2}}));
    for (const auto& t : {gaussian_triplet, sym_atoms, mixed}) {
        const auto psi = young_psi(t);
        double prev = 0.0;
        double delta2_K = 0.0;
        for (double r = 1e-6; r <= 1e6; r *= 2.0) {
            const double v = psi(r);
            CHECK(v > 0.0);
            CHECK(psi(-r) == doctest::Approx(v).epsilon(1e-12)); // even
            CHECK(v >= prev * (1.0 - 1e-9));                     // nondecreasing
            delta2_K = std::max(delta2_K, psi(2.0 * r) / v);
            prev = v;
        }
        CHECK(delta2_K <= 16.0); // Δ₂ with one K for the whole grid
    }
}

TEST_CASE("psi_p variants") {
    const auto psi2 = young_psi_p(gaussian_triplet, 2.0);
    CHECK(psi2(1.5) == doctest::Approx(2.25).epsilon(1e-14));

    // (0,0,δ₁), p=1, r=2: sup-term 1 plus ν-part |2·1| = 2
    const LevyTriplet cp(0.0, 0.0, LevyMeasure::atoms({{1.0, 1.0}}));
    const auto psi1 = young_psi_p(cp, 1.0);
    CHECK(psi1(2.0) == doctest::Approx(3.0).epsilon(1e-12));

    // (0,0,δ_{0.5}), p=1, r=1: |0.5|² branch, no H contribution
    const LevyTriplet cp_half(0.0, 0.0, LevyMeasure::atoms({{0.5, 1.0}}));
    const auto psi1h = young_psi_p(cp_half, 1.0);
    CHECK(psi1h(1.0) == doctest::Approx(0.25).epsilon(1e-12));

    // p = 0 coincides with Ψ
    const auto psi = young_psi(cp);
    const auto psi0 = young_psi_p(cp, 0.0);
    for (double r = 1e-3; r < 1e3; r *= 7.0)
        CHECK(psi0(r) == doctest::Approx(psi(r)).epsilon(1e-13));

    // stable(1.5) has no second moment
    const LevyTriplet st(0.0, 0.0, LevyMeasure::alpha_stable(1.5, 0.0, 1.0));
    CHECK_THROWS_AS(young_psi_p(st, 2.0), DomainError);
}

TEST_CASE("luxemburg norm in the Gaussian case is the L2 norm") {
    const auto psi = young_psi(gaussian_triplet);
    CHECK(luxemburg_norm(psi, Kernel::indicator(0.0, 4.0)) ==
          doctest::Approx(2.0).epsilon(1e-7));
    CHECK(luxemburg_norm(psi, Kernel::ou(1.0)) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-7));
    CHECK(luxemburg_norm(psi, scaled_ou(0.0, 1.0)) == 0.0);
}

TEST_CASE("luxemburg norm is absolutely homogeneous") {
    const auto psi = young_psi(gaussian_triplet);
    const double base = luxemburg_norm(psi, scaled_ou(1.0, 1.0));
    for (double c : {0.1, 3.0, -2.0}) {
        const double scaled = luxemburg_norm(psi, scaled_ou(c, 1.0));
        CHECK(scaled == doctest::Approx(std::abs(c) * base).epsilon(1e-7));
    }
}

TEST_CASE("complementary young function") {
    const auto psi = young_psi(gaussian_triplet);
    CHECK(complementary_young(psi, 1.0) == doctest::Approx(0.25).epsilon(1e-6));
    CHECK(complementary_young(psi, 0.0) == 0.0);
    // bounded Ψ: the sup is +∞ for any x > 0
    const auto bounded = young_psi(sym_atoms);
    CHECK(std::isinf(complementary_young(bounded, 0.5)));
}

TEST_CASE("one-sided norm equivalence: ∫|fg| ≤ 2 ‖f‖₀ for dual-feasible g") {
    // Gaussian triplet: Ψ = r², Ψ̄ = x²/4; dual feasibility means ‖g‖₂ ≤ 2
    const auto psi = young_psi(gaussian_triplet);
    const auto f = Kernel::ou(1.0);
    const double norm = luxemburg_norm(psi, f);
    rng::CellRng g_rng(2024, 0, 0);
    const double dt = 1e-3;
    const int n = 20000; // grid on [0, 20]
    for (int trial = 0; trial < 20; ++trial) {
        // random piecewise-constant g on [0,20], scaled to ∫ Ψ̄(|g|) = 1
        std::vector<double> g(n);
        for (auto& v : g) v = g_rng.normal();
        double psibar_int = 0.0;
        for (double v : g) psibar_int += 0.25 * v * v * dt;
        const double scale = 1.0 / std::sqrt(psibar_int);
        double fg = 0.0;
        for (int i = 0; i < n; ++i)
            fg += std::abs(f(i * dt) * scale * g[i]) * dt;
        CHECK(fg <= 2.0 * norm + 1e-6);
    }
}

TEST_CASE("membership verdicts with rule cross-check") {
    const LevyTriplet cp(0.0, 0.0, LevyMeasure::atoms({{1.0, 1.0}}));
    auto rep = membership(cp, Kernel::ou(1.0));
    CHECK(rep.member_of_L_psi);
    REQUIRE(rep.analytic_rule.has_value());
    REQUIRE(rep.quadrature_value.has_value());

    // gamma kernel α=-0.75 with a gamma subordinator: member via 2(c)
    const LevyTriplet sub(0.0, 0.0, LevyMeasure::gamma_subordinator(1.0, 1.0));
    rep = membership(sub, Kernel::gamma(-0.75));
    CHECK(rep.member_of_L_psi);
    CHECK(rep.analytic_rule->find("2(c)") != std::string::npos);

    // B = 1 kills membership at α = −1/2
    const LevyTriplet with_b(0.0, 1.0, LevyMeasure::atoms({{1.0, 1.0}}));
    rep = membership(with_b, Kernel::gamma(-0.5));
    CHECK(!rep.member_of_L_psi);

    // α-stable 1.5 at α = −0.75 diverges (2(c) integral infinite)
    const LevyTriplet st(0.0, 0.0, LevyMeasure::alpha_stable(1.5, 0.0, 1.0));
    rep = membership(st, Kernel::gamma(-0.75));
    CHECK(!rep.member_of_L_psi);

    // Ψ_p membership report
    rep = membership(cp, Kernel::gamma(-0.5), 1.0);
    REQUIRE(rep.member_of_L_psi_p.has_value());
    CHECK(*rep.member_of_L_psi_p);

    // norm on demand
    rep = membership(gaussian_triplet, Kernel::ou(1.0), std::nullopt, true);
    REQUIRE(rep.luxemburg.has_value());
    CHECK(*rep.luxemburg == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-6));
}
