#include <cmath>
#include <complex>

#include <doctest.h>

#include "ctma/integral_law.hpp"

using namespace ctma;

TEST_CASE("unit window preserves the triplet") {
    const LevyTriplet t(0.3, 2.0, LevyMeasure::atoms({{1.0, 1.0}, {-0.5, 0.4}}));
    const auto law = integral_law(t, Kernel::indicator(0.0, 1.0));
    CHECK(law.gamma_f == doctest::Approx(0.3).epsilon(1e-9));
    CHECK(law.b_f == doctest::Approx(2.0).epsilon(1e-9));
    // ν^f(A) = ν(A) for intervals away from 0
    CHECK(law.nu_f(0.5, 1.5) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(law.nu_f(-1.0, -0.4) == doctest::Approx(0.4).epsilon(1e-9));
    CHECK(law.nu_f(1.5, 9.0) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("window of length two scales the Gaussian cumulant") {
    const LevyTriplet t(0.0, 1.0, LevyMeasure::zero());
    const auto law = integral_law(t, Kernel::indicator(0.0, 2.0));
    for (double th : {0.5, 1.0, 2.0}) {
        const auto c = law.cumulant(th);
        CHECK(c.real() == doctest::Approx(-th * th).epsilon(1e-9));
        CHECK(std::abs(c.imag()) < 1e-12);
    }
}

TEST_CASE("OU kernel halves the Gaussian variance") {
    const LevyTriplet t(0.0, 1.0, LevyMeasure::zero());
    const auto law = integral_law(t, Kernel::ou(1.0));
    CHECK(law.b_f == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(law.gamma_f == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("atom summation and quadrature path agree") {
    // the cumulant through the s-quadrature of ψ(f(s)θ) for a unit window
    // must reproduce the closed-form atom evaluation ψ(θ)
    const LevyTriplet t(0.0, 0.0, LevyMeasure::atoms({{1.0, 1.0}}));
    const auto law = integral_law(t, Kernel::indicator(0.0, 1.0));
    for (double th : {0.5, 1.0, 3.0}) {
        const auto via_quadrature = law.cumulant(th);
        const auto direct = cumulant_psi(t, th);
        CHECK(std::abs(via_quadrature - direct) < 1e-12);
    }
}

TEST_CASE("divergent component is reported by name") {
    // gamma(-0.5) kernel with b > 0: ∫ f² = ∫ s^{-1} e^{-2s} diverges
    const LevyTriplet t(0.0, 1.0, LevyMeasure::zero());
    try {
        integral_law(t, Kernel::gamma(-0.5));
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::string(e.what()).find("B^f") != std::string::npos);
    }
}
