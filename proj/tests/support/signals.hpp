#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "illusion/audio/fft.hpp"
#include "illusion/audio/wav.hpp"

namespace testsupport {

inline illusion::audio::AudioClip sine_clip(double freq_hz, double seconds, int sample_rate,
                                            double amplitude = 0.5) {
  illusion::audio::AudioClip clip;
  clip.sample_rate = sample_rate;
  const auto n = static_cast<std::size_t>(seconds * sample_rate);
  clip.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    clip.samples[i] =
        amplitude * std::sin(2.0 * std::numbers::pi * freq_hz * i / sample_rate);
  }
  return clip;
}

inline void add_sine(illusion::audio::AudioClip& clip, double freq_hz, double amplitude) {
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    clip.samples[i] +=
        amplitude * std::sin(2.0 * std::numbers::pi * freq_hz * i / clip.sample_rate);
  }
}

// Peak frequency via a zero-padded Hann-windowed FFT of the clip interior.
inline double dominant_frequency(const illusion::audio::AudioClip& clip,
                                 std::size_t fft_size = 1 << 16) {
  std::vector<std::complex<double>> buf(fft_size, 0.0);
  const std::size_t n = std::min(clip.samples.size(), fft_size);
  for (std::size_t i = 0; i < n; ++i) {
    const double w =
        0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / n);
    buf[i] = clip.samples[i] * w;
  }
  illusion::audio::fft_inplace(buf, false);
  std::size_t best = 1;
  for (std::size_t b = 1; b + 1 < fft_size / 2; ++b) {
    if (std::abs(buf[b]) > std::abs(buf[best])) best = b;
  }
  return static_cast<double>(best) * clip.sample_rate / static_cast<double>(fft_size);
}

// Steady-state amplitude over the second half of a clip (whole cycles assumed).
inline double steady_amplitude(const illusion::audio::AudioClip& clip) {
  const std::size_t start = clip.samples.size() / 2;
  double energy = 0.0;
  for (std::size_t i = start; i < clip.samples.size(); ++i) {
    energy += clip.samples[i] * clip.samples[i];
  }
  return std::sqrt(2.0 * energy / static_cast<double>(clip.samples.size() - start));
}

inline double rms_difference(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(acc / static_cast<double>(n == 0 ? 1 : n));
}

}  // namespace testsupport
