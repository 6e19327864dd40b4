#include <doctest.h>

#include <cmath>

#include "illusion/audio/stft.hpp"
#include "illusion/rng.hpp"
#include "support/signals.hpp"

using namespace illusion;
using namespace illusion::audio;

TEST_SUITE_BEGIN("stft");

TEST_CASE("frame geometry") {
  AudioClip clip;
  clip.sample_rate = 22050;
  clip.samples.assign(1024 + 3 * 256, 0.1);
  const Spectrogram spec = stft(clip, 1024, 256);
  CHECK(spec.frames == 4);  // floor((n - 1024)/256) + 1
  CHECK(spec.bins == 513);
  CHECK(spec.bin_frequency(46) == doctest::Approx(46.0 * 22050.0 / 1024.0));
}

TEST_CASE("pure 1 kHz tone peaks at bin 46") {
  const AudioClip clip = testsupport::sine_clip(1000.0, 0.5, 22050);
  const Spectrogram spec = stft(clip, 1024, 256);
  for (std::size_t f = 0; f < spec.frames; ++f) {
    std::size_t argmax = 0;
    for (std::size_t b = 1; b < spec.bins; ++b) {
      if (spec.at(f, b) > spec.at(f, argmax)) argmax = b;
    }
    CHECK(argmax == 46);  // round(1000 * 1024 / 22050)
  }
}

TEST_CASE("all-zero clip yields all-zero magnitudes") {
  AudioClip clip;
  clip.sample_rate = 8000;
  clip.samples.assign(4096, 0.0);
  const Spectrogram spec = stft(clip, 1024, 256);
  for (double m : spec.magnitudes) CHECK(m == 0.0);
}

TEST_CASE("Parseval: windowed time energy equals spectral energy") {
  SplitMix64 rng(31);
  AudioClip clip;
  clip.sample_rate = 16000;
  clip.samples.resize(4096);
  for (double& s : clip.samples) s = rng.next_double() * 2.0 - 1.0;

  const std::size_t window_size = 1024;
  const Spectrogram spec = stft(clip, window_size, 256);
  const auto window = hann_window(window_size);

  for (std::size_t f = 0; f < spec.frames; ++f) {
    double time_energy = 0.0;
    for (std::size_t i = 0; i < window_size; ++i) {
      const double v = clip.samples[f * 256 + i] * window[i];
      time_energy += v * v;
    }
    double spectral = spec.at(f, 0) * spec.at(f, 0) +
                      spec.at(f, spec.bins - 1) * spec.at(f, spec.bins - 1);
    for (std::size_t b = 1; b + 1 < spec.bins; ++b) {
      spectral += 2.0 * spec.at(f, b) * spec.at(f, b);
    }
    spectral /= static_cast<double>(window_size);
    CHECK(std::abs(spectral - time_energy) / time_energy < 1e-6);
  }
}

TEST_CASE("short clips zero-pad into one frame") {
  set_warnings_enabled(false);
  AudioClip clip;
  clip.sample_rate = 8000;
  clip.samples.assign(100, 0.5);
  const Spectrogram spec = stft(clip, 1024, 256);
  set_warnings_enabled(true);
  CHECK(spec.frames == 1);
}

TEST_CASE("parameter validation") {
  const AudioClip clip = testsupport::sine_clip(440.0, 0.2, 8000);
  CHECK_THROWS_AS(stft(clip, 1000, 256), DomainError);  // not a power of two
  CHECK_THROWS_AS(stft(clip, 32, 8), DomainError);      // too small
  CHECK_THROWS_AS(stft(clip, 1024, 0), DomainError);
  CHECK_THROWS_AS(stft(clip, 1024, 2048), DomainError);
  AudioClip empty;
  empty.sample_rate = 8000;
  CHECK_THROWS_AS(stft(empty, 1024, 256), DomainError);
}

TEST_SUITE_END();
