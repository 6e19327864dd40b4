#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "illusion/audio/wav.hpp"

namespace illusion::audio {

enum class StretchMode : std::uint8_t {
  Resample,      // playback-rate change: duration and pitch both scale
  PhaseVocoder,  // duration scales, pitch preserved
};

std::string_view to_string(StretchMode mode);
StretchMode parse_stretch_mode(std::string_view text);

// Slowdown factors used for the published audio-illusion examples.
inline constexpr std::array<double, 4> kDefaultStretchFactors = {1.3, 1.5, 1.7, 1.9};

struct TransformParams {
  double damp_cutoff = 1000.0;  // Hz
  double damp_atten_db = -12.0; // <= 0
  double stretch_factor = 1.5;  // in [1.0, 3.0]
  StretchMode mode = StretchMode::Resample;
};

// Second-order low-shelf: gain atten_db at DC, unity in the high band.
// Output length equals input length; samples clamp to [-1, 1] with a warning.
AudioClip damp_low(const AudioClip& clip, double cutoff_hz, double atten_db);

// Slows a clip by factor (in [1.0, 3.0]) at unchanged sample rate. Resample
// mode uses band-limited (windowed-sinc) interpolation; phase-vocoder mode
// propagates STFT phases with a Hann window of window_size and hop
// window_size/4.
AudioClip time_stretch(const AudioClip& clip, double factor, StretchMode mode,
                       std::size_t window_size = 1024);

struct SweepEntry {
  TransformParams params;
  std::filesystem::path file;
};

// Damps then stretches the clip over the parameter grid, writing
// `{stem}_c{cutoff}_a{atten}_x{factor}.wav` for every combination in grid
// order (cutoffs outermost, factors innermost).
std::vector<SweepEntry> generate_sweep(const AudioClip& clip, const std::string& stem,
                                       const std::vector<double>& cutoffs,
                                       const std::vector<double>& attens,
                                       const std::vector<double>& factors, StretchMode mode,
                                       const std::filesystem::path& out_dir);

// CSV: file,cutoff_hz,atten_db,factor,mode
void write_sweep_manifest(std::ostream& out, const std::vector<SweepEntry>& entries);

}  // namespace illusion::audio
