#pragma once

#include <complex>
#include <vector>

namespace illusion::audio {

// In-place iterative radix-2 FFT; size must be a power of two. The inverse
// transform includes the 1/N normalization.
void fft_inplace(std::vector<std::complex<double>>& values, bool inverse);

bool is_power_of_two(std::size_t n);

}  // namespace illusion::audio
