#ifndef CTMA_RNG_HPP
#define CTMA_RNG_HPP

#include <cstdint>

namespace ctma::rng {

/// SplitMix64 finalizer; also usable as a stateless hash.
std::uint64_t mix64(std::uint64_t x);

/// Combine a seed with stream and counter indices into a substream key.
/// Distinct (seed, stream, counter) triples give statistically independent
/// streams, so draws may be produced in any order across cells or paths
/// without changing the result.
std::uint64_t substream_key(std::uint64_t seed, std::uint64_t stream,
                            std::uint64_t counter);

/// Counter-keyed generator for one grid cell (or one Monte Carlo unit).
/// The draw sequence within a cell is fixed by the caller's sampling
/// scheme, making paths bit-identical for identical inputs regardless of
/// task scheduling.
class CellRng {
public:
    CellRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
        : state_(substream_key(seed, stream, counter)) {}

    /// Uniform draw in (0, 1).
    double uniform();

    /// Standard normal draw (Marsaglia polar, spare cached).
    double normal();

    /// Poisson draw with the given mean (Knuth product method, chunked so
    /// large means do not underflow).
    std::uint64_t poisson(double mean);

private:
    std::uint64_t next_u64();
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace ctma::rng

#endif
