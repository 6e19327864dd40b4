#pragma once

#include <vector>

#include "illusion/audio/wav.hpp"

namespace illusion::audio {

// Magnitude short-time Fourier transform, Hann window.
struct Spectrogram {
  std::size_t frames = 0;
  std::size_t bins = 0;  // window_size/2 + 1
  std::vector<double> magnitudes;  // frames x bins, row-major
  std::size_t window_size = 0;
  std::size_t hop = 0;
  int sample_rate = 0;

  double at(std::size_t frame, std::size_t bin) const {
    return magnitudes[frame * bins + bin];
  }
  double bin_frequency(std::size_t bin) const {
    return static_cast<double>(bin) * sample_rate / static_cast<double>(window_size);
  }
};

// Periodic Hann window of the given size.
std::vector<double> hann_window(std::size_t size);

// Frame count floor((n - window)/hop) + 1; clips shorter than one window
// zero-pad into a single frame (with a warning). window_size must be a power
// of two >= 64 and hop in [1, window_size].
Spectrogram stft(const AudioClip& clip, std::size_t window_size = 1024, std::size_t hop = 256);

}  // namespace illusion::audio
