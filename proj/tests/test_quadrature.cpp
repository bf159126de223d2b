#include <cmath>

#include <doctest.h>

#include "ctma/quadrature.hpp"

using namespace ctma;

TEST_CASE("adaptive integrates smooth functions to tolerance") {
    auto r = quad::adaptive([](double x) { return std::exp(-x * x); }, -6.0, 6.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));

    r = quad::adaptive([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("endpoint singularity substitution") {
    // ∫_0^1 x^{-1/2} dx = 2
    auto r = quad::adaptive_singular_lower(
        [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 0.5);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));

    // ∫_0^1 (1-x)^{-0.3} dx = 1/0.7
    r = quad::adaptive_singular_upper(
        [](double x) { return std::pow(1.0 - x, -0.3); }, 0.0, 1.0, 0.3);
    CHECK(r.value == doctest::Approx(1.0 / 0.7).epsilon(1e-10));
}

TEST_CASE("classify_lower resolves integrable singularities and divergences") {
    auto fin = quad::classify_lower([](double x) { return 1.0 / std::sqrt(x); }, 1.0);
    CHECK(fin.verdict == quad::Verdict::finite);
    CHECK(fin.value == doctest::Approx(2.0).epsilon(1e-8));

    auto harmonic = quad::classify_lower([](double x) { return 1.0 / x; }, 1.0);
    CHECK(harmonic.verdict == quad::Verdict::divergent);

    auto steep = quad::classify_lower([](double x) { return std::pow(x, -1.5); }, 1.0);
    CHECK(steep.verdict == quad::Verdict::divergent);

    auto zero = quad::classify_lower([](double) { return 0.0; }, 1.0);
    CHECK(zero.verdict == quad::Verdict::finite);
    CHECK(zero.value == 0.0);
}

TEST_CASE("classify_upper resolves tails") {
    auto fin = quad::classify_upper([](double x) { return std::exp(-x); }, 1.0);
    CHECK(fin.verdict == quad::Verdict::finite);
    CHECK(fin.value == doctest::Approx(std::exp(-1.0)).epsilon(1e-8));

    auto power = quad::classify_upper([](double x) { return std::pow(x, -2.5); }, 1.0);
    CHECK(power.verdict == quad::Verdict::finite);
    CHECK(power.value == doctest::Approx(1.0 / 1.5).epsilon(1e-8));

    auto div = quad::classify_upper([](double x) { return 1.0 / x; }, 1.0);
    CHECK(div.verdict == quad::Verdict::divergent);

    auto grow = quad::classify_upper([](double x) { return std::sqrt(x); }, 1.0);
    CHECK(grow.verdict == quad::Verdict::divergent);
}

TEST_CASE("geometric pre-splitting copes with wide ranges") {
    auto r = quad::adaptive_geometric([](double x) { return 1.0 / (x * x); }, 1e-6,
                                      1e6);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1e6 - 1e-6).epsilon(1e-9));
}
