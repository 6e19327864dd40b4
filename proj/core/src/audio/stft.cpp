#include "illusion/audio/stft.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "illusion/audio/fft.hpp"

namespace illusion::audio {

std::vector<double> hann_window(std::size_t size) {
  std::vector<double> w(size);
  for (std::size_t i = 0; i < size; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                static_cast<double>(size));
  }
  return w;
}

Spectrogram stft(const AudioClip& clip, std::size_t window_size, std::size_t hop) {
  if (window_size < 64 || !is_power_of_two(window_size)) {
    throw DomainError("stft: window size must be a power of two >= 64");
  }
  if (hop < 1 || hop > window_size) {
    throw DomainError("stft: hop must lie in [1, window_size]");
  }
  if (clip.samples.empty()) throw DomainError("stft: empty clip");

  const std::size_t n = clip.samples.size();
  std::size_t frames = 1;
  if (n < window_size) {
    log_warning("stft: clip shorter than one window, zero-padding to one frame");
  } else {
    frames = (n - window_size) / hop + 1;
  }

  Spectrogram spec;
  spec.frames = frames;
  spec.bins = window_size / 2 + 1;
  spec.window_size = window_size;
  spec.hop = hop;
  spec.sample_rate = clip.sample_rate;
  spec.magnitudes.resize(frames * spec.bins);

  const std::vector<double> window = hann_window(window_size);
  std::vector<std::complex<double>> buffer(window_size);
  for (std::size_t f = 0; f < frames; ++f) {
    const std::size_t start = f * hop;
    for (std::size_t i = 0; i < window_size; ++i) {
      const double sample = start + i < n ? clip.samples[start + i] : 0.0;
      buffer[i] = sample * window[i];
    }
    fft_inplace(buffer, false);
    for (std::size_t b = 0; b < spec.bins; ++b) {
      spec.magnitudes[f * spec.bins + b] = std::abs(buffer[b]);
    }
  }
  return spec;
}

}  // namespace illusion::audio
