#ifndef CTMA_FFT_HPP
#define CTMA_FFT_HPP

#include <span>
#include <vector>

namespace ctma::fft {

/// Full linear convolution c[k] = Σ_i a[i] b[k-i], size a.size()+b.size()-1.
std::vector<double> convolve_direct(std::span<const double> a,
                                    std::span<const double> b);

/// Same result via zero-padded real FFTs.
std::vector<double> convolve_fft(std::span<const double> a,
                                 std::span<const double> b);

/// Picks the FFT path when a.size()*b.size() exceeds `fft_threshold`,
/// direct summation otherwise. Both paths agree to ~1e-10 absolute on
/// unit-scale inputs.
std::vector<double> convolve(std::span<const double> a, std::span<const double> b,
                             double fft_threshold = 1e5);

} // namespace ctma::fft

#endif
