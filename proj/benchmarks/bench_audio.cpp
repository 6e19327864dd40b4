#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "illusion/audio/profile.hpp"
#include "illusion/audio/stft.hpp"
#include "illusion/audio/transform.hpp"

using namespace illusion::audio;

namespace {

AudioClip test_tone(double seconds) {
  AudioClip clip;
  clip.sample_rate = 22050;
  clip.samples.resize(static_cast<std::size_t>(seconds * clip.sample_rate));
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    const double t = static_cast<double>(i) / clip.sample_rate;
    clip.samples[i] = 0.4 * std::sin(2.0 * std::numbers::pi * 440.0 * t) +
                      0.2 * std::sin(2.0 * std::numbers::pi * 2200.0 * t);
  }
  return clip;
}

}  // namespace

static void BM_Stft(benchmark::State& state) {
  const AudioClip clip = test_tone(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stft(clip, 1024, 256));
  }
}
BENCHMARK(BM_Stft)->Unit(benchmark::kMillisecond);

static void BM_SpectralProfile(benchmark::State& state) {
  const Spectrogram spec = stft(test_tone(1.0), 1024, 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_profile(spec, 1000.0));
  }
}
BENCHMARK(BM_SpectralProfile);

static void BM_DampLow(benchmark::State& state) {
  const AudioClip clip = test_tone(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(damp_low(clip, 1000.0, -12.0));
  }
}
BENCHMARK(BM_DampLow);

static void BM_StretchResample(benchmark::State& state) {
  const AudioClip clip = test_tone(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(time_stretch(clip, 1.5, StretchMode::Resample));
  }
}
BENCHMARK(BM_StretchResample)->Unit(benchmark::kMillisecond);

static void BM_StretchVocoder(benchmark::State& state) {
  const AudioClip clip = test_tone(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(time_stretch(clip, 1.5, StretchMode::PhaseVocoder));
  }
}
BENCHMARK(BM_StretchVocoder)->Unit(benchmark::kMillisecond);
