#include "ctma/rng.hpp"

#include <cmath>

#include "ctma/errors.hpp"

namespace ctma::rng {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t substream_key(std::uint64_t seed, std::uint64_t stream,
                            std::uint64_t counter) {
    std::uint64_t k = mix64(seed);
    k = mix64(k ^ (stream * 0xD1342543DE82EF95ull));
    k = mix64(k ^ (counter * 0x9E3779B97F4A7C15ull));
    return k;
}

std::uint64_t CellRng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double CellRng::uniform() {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
}

double CellRng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
}

std::uint64_t CellRng::poisson(double mean) {
    if (mean < 0.0) throw DomainError("poisson: mean must be >= 0");
    std::uint64_t total = 0;
    while (mean > 60.0) {
        total += poisson(60.0);
        mean -= 60.0;
    }
    if (mean == 0.0) return total;
    const double limit = std::exp(-mean);
    double prod = 1.0;
    std::uint64_t k = 0;
    for (;;) {
        prod *= uniform();
        if (prod <= limit) break;
        ++k;
    }
    return total + k;
}

} // namespace ctma::rng
