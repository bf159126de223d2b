#include "ctma/fft.hpp"

#include <complex>
#include <cstring>
#include <mutex>

#include <fftw3.h>

namespace ctma::fft {

std::vector<double> convolve_direct(std::span<const double> a,
                                    std::span<const double> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double ai = a[i];
        if (ai == 0.0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += ai * b[j];
    }
    return c;
}

namespace {
// FFTW's planner is not thread-safe.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

std::vector<double> convolve_fft(std::span<const double> a,
                                 std::span<const double> b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t out_n = a.size() + b.size() - 1;
    std::size_t n = 1;
    while (n < out_n) n <<= 1;

    std::vector<double> pa(n, 0.0), pb(n, 0.0);
    std::memcpy(pa.data(), a.data(), a.size() * sizeof(double));
    std::memcpy(pb.data(), b.data(), b.size() * sizeof(double));

    const std::size_t nc = n / 2 + 1;
    std::vector<std::complex<double>> fa(nc), fb(nc);

    fftw_plan fwd_a, fwd_b, bwd;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fwd_a = fftw_plan_dft_r2c_1d(static_cast<int>(n), pa.data(),
                                     reinterpret_cast<fftw_complex*>(fa.data()),
                                     FFTW_ESTIMATE);
        fwd_b = fftw_plan_dft_r2c_1d(static_cast<int>(n), pb.data(),
                                     reinterpret_cast<fftw_complex*>(fb.data()),
                                     FFTW_ESTIMATE);
    }
    fftw_execute(fwd_a);
    fftw_execute(fwd_b);

    for (std::size_t i = 0; i < nc; ++i) fa[i] *= fb[i];

    std::vector<double> out(n);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        bwd = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                                   reinterpret_cast<fftw_complex*>(fa.data()),
                                   out.data(), FFTW_ESTIMATE);
    }
    fftw_execute(bwd);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd_a);
        fftw_destroy_plan(fwd_b);
        fftw_destroy_plan(bwd);
    }

    const double scale = 1.0 / static_cast<double>(n);
    out.resize(out_n);
    for (double& x : out) x *= scale;
    return out;
}

std::vector<double> convolve(std::span<const double> a, std::span<const double> b,
                             double fft_threshold) {
    const double work =
        static_cast<double>(a.size()) * static_cast<double>(b.size());
    return work > fft_threshold ? convolve_fft(a, b) : convolve_direct(a, b);
}

} // namespace ctma::fft
