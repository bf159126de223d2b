#include <cmath>

#include <doctest.h>

#include "ctma/quadrature.hpp"
#include "ctma/special.hpp"

using namespace ctma;

TEST_CASE("regularized incomplete gamma matches quadrature") {
    // oracle: direct quadrature of the defining integral
    for (double a : {0.25, 0.5, 1.0, 2.5, 7.0}) {
        for (double x : {0.1, 0.5, 1.0, 3.0, 10.0}) {
            auto f = [a](double t) { return std::pow(t, a - 1.0) * std::exp(-t); };
            const double oracle =
                quad::adaptive_singular_lower(f, 0.0, x, std::max(0.0, 1.0 - a)).value /
                std::tgamma(a);
            CHECK(special::gamma_p(a, x) == doctest::Approx(oracle).epsilon(1e-10));
        }
    }
}

TEST_CASE("gamma_p limits") {
    CHECK(special::gamma_p(1.5, 0.0) == 0.0);
    CHECK(special::gamma_p(1.0, 50.0) == doctest::Approx(1.0).epsilon(1e-14));
    // P(1, x) = 1 - e^{-x}
    CHECK(special::gamma_p(1.0, 0.7) ==
          doctest::Approx(1.0 - std::exp(-0.7)).epsilon(1e-14));
}

TEST_CASE("cell integrals stitch exactly") {
    const double a = 0.5; // singular integrand t^{-1/2} e^{-t}
    const double dt = 1e-3;
    double sum = 0.0;
    for (int k = 0; k < 2000; ++k)
        sum += special::gamma_cell_integral(a, k * dt, (k + 1) * dt);
    CHECK(sum == doctest::Approx(special::lower_gamma(a, 2.0)).epsilon(1e-11));
}

TEST_CASE("beta function") {
    CHECK(special::beta(0.5, 0.5) == doctest::Approx(M_PI).epsilon(1e-13));
    CHECK(special::beta(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
}
