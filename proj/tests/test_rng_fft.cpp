#include <cmath>
#include <vector>

#include <doctest.h>

#include "ctma/fft.hpp"
#include "ctma/rng.hpp"

using namespace ctma;

TEST_CASE("substreams are reproducible and order-free") {
    rng::CellRng a(42, 0, 7);
    rng::CellRng b(42, 0, 7);
    for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());

    // different counters decorrelate
    rng::CellRng c(42, 0, 8);
    CHECK(rng::CellRng(42, 0, 7).uniform() != c.uniform());
}

TEST_CASE("normal and poisson moments") {
    rng::CellRng g(123, 1, 0);
    const int n = 200000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = g.normal();
        s += z;
        s2 += z * z;
    }
    CHECK(std::abs(s / n) < 4.0 / std::sqrt(double(n)));
    CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.02));

    double mean = 3.7;
    double ps = 0.0, ps2 = 0.0;
    for (int i = 0; i < n / 4; ++i) {
        const auto k = static_cast<double>(g.poisson(mean));
        ps += k;
        ps2 += k * k;
    }
    const double m = ps / (n / 4);
    CHECK(m == doctest::Approx(mean).epsilon(0.02));
    CHECK(ps2 / (n / 4) - m * m == doctest::Approx(mean).epsilon(0.05));

    // chunked path for large means
    double big = 0.0;
    for (int i = 0; i < 2000; ++i) big += static_cast<double>(g.poisson(250.0));
    CHECK(big / 2000.0 == doctest::Approx(250.0).epsilon(0.01));
}

TEST_CASE("fft and direct convolution agree") {
    rng::CellRng g(7, 0, 0);
    std::vector<double> a(1000), b(257);
    for (auto& x : a) x = g.normal();
    for (auto& x : b) x = g.normal();
    const auto d = fft::convolve_direct(a, b);
    const auto f = fft::convolve_fft(a, b);
    REQUIRE(d.size() == f.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i)
        worst = std::max(worst, std::abs(d[i] - f[i]));
    CHECK(worst < 1e-10);
}

TEST_CASE("convolution of deltas") {
    std::vector<double> a{1.0, 2.0}, b{3.0, 0.0, 4.0};
    const auto c = fft::convolve_direct(a, b);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == doctest::Approx(3.0));
    CHECK(c[1] == doctest::Approx(6.0));
    CHECK(c[2] == doctest::Approx(4.0));
    CHECK(c[3] == doctest::Approx(8.0));
}
