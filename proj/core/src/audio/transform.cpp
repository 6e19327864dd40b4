#include "illusion/audio/transform.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "illusion/audio/fft.hpp"
#include "illusion/audio/stft.hpp"

namespace illusion::audio {

std::string_view to_string(StretchMode mode) {
  return mode == StretchMode::Resample ? "resample" : "vocoder";
}

StretchMode parse_stretch_mode(std::string_view text) {
  if (text == "resample") return StretchMode::Resample;
  if (text == "vocoder" || text == "phase_vocoder") return StretchMode::PhaseVocoder;
  throw DataError("unknown stretch mode: " + std::string(text));
}

namespace {

AudioClip clamp_samples(AudioClip clip, const char* stage) {
  std::size_t clipped = 0;
  for (double& s : clip.samples) {
    if (s > 1.0) {
      s = 1.0;
      ++clipped;
    } else if (s < -1.0) {
      s = -1.0;
      ++clipped;
    }
  }
  if (clipped > 0) {
    log_warning(std::string(stage) + ": clamped " + std::to_string(clipped) + " sample(s)");
  }
  return clip;
}

AudioClip stretch_resample(const AudioClip& clip, double factor) {
  const std::size_t n = clip.samples.size();
  const auto out_len = static_cast<std::size_t>(std::llround(static_cast<double>(n) * factor));

  // Windowed-sinc interpolation; slowing never aliases (frequencies only
  // move down), so no anti-alias pre-filter is needed.
  constexpr int kHalfTaps = 32;
  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples.resize(out_len);
  for (std::size_t i = 0; i < out_len; ++i) {
    const double t = static_cast<double>(i) / factor;
    const auto center = static_cast<long>(std::floor(t));
    double acc = 0.0;
    for (long k = center - kHalfTaps + 1; k <= center + kHalfTaps; ++k) {
      if (k < 0 || k >= static_cast<long>(n)) continue;
      const double u = t - static_cast<double>(k);
      double kernel;
      if (std::abs(u) < 1e-12) {
        kernel = 1.0;
      } else {
        const double pu = std::numbers::pi * u;
        kernel = std::sin(pu) / pu;
      }
      // Hann taper over the kernel support.
      kernel *= 0.5 + 0.5 * std::cos(std::numbers::pi * u / kHalfTaps);
      acc += clip.samples[static_cast<std::size_t>(k)] * kernel;
    }
    out.samples[i] = acc;
  }
  return out;
}

double wrap_phase(double phase) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  phase = std::fmod(phase + std::numbers::pi, two_pi);
  if (phase < 0.0) phase += two_pi;
  return phase - std::numbers::pi;
}

AudioClip stretch_phase_vocoder(const AudioClip& clip, double factor, std::size_t window_size) {
  if (!is_power_of_two(window_size) || window_size < 64) {
    throw DomainError("time_stretch: window size must be a power of two >= 64");
  }
  const std::size_t n = clip.samples.size();
  const std::size_t synth_hop = window_size / 4;
  const auto analysis_hop = static_cast<std::size_t>(
      std::max<long>(1, std::llround(static_cast<double>(synth_hop) / factor)));
  const double effective = static_cast<double>(synth_hop) / static_cast<double>(analysis_hop);
  const auto target_len =
      static_cast<std::size_t>(std::llround(static_cast<double>(n) * factor));

  // Pad the analysis signal by one window on each side so every real sample
  // sits under a full overlap-add envelope.
  const auto offset = static_cast<std::size_t>(
      std::llround(static_cast<double>(window_size) * effective));
  const std::size_t out_needed = offset + target_len + window_size;
  const std::size_t frames = out_needed / synth_hop + 2;

  const std::vector<double> window = hann_window(window_size);
  const std::size_t bins = window_size / 2 + 1;

  std::vector<double> prev_phase(bins, 0.0), synth_phase(bins, 0.0);
  std::vector<double> out(frames * synth_hop + window_size, 0.0);
  std::vector<double> envelope(out.size(), 0.0);
  std::vector<std::complex<double>> buffer(window_size);

  auto padded_sample = [&](long idx) -> double {
    idx -= static_cast<long>(window_size);
    return idx >= 0 && idx < static_cast<long>(n) ? clip.samples[static_cast<std::size_t>(idx)]
                                                  : 0.0;
  };

  for (std::size_t m = 0; m < frames; ++m) {
    const long start = static_cast<long>(m * analysis_hop);
    for (std::size_t i = 0; i < window_size; ++i) {
      buffer[i] = padded_sample(start + static_cast<long>(i)) * window[i];
    }
    fft_inplace(buffer, false);

    for (std::size_t b = 0; b < bins; ++b) {
      const double magnitude = std::abs(buffer[b]);
      const double phase = std::arg(buffer[b]);
      const double bin_freq = 2.0 * std::numbers::pi * static_cast<double>(b) /
                              static_cast<double>(window_size);
      if (m == 0) {
        synth_phase[b] = phase;
      } else {
        const double expected = bin_freq * static_cast<double>(analysis_hop);
        const double deviation = wrap_phase(phase - prev_phase[b] - expected);
        const double instantaneous =
            bin_freq + deviation / static_cast<double>(analysis_hop);
        synth_phase[b] += instantaneous * static_cast<double>(synth_hop);
      }
      prev_phase[b] = phase;
      buffer[b] = std::polar(magnitude, synth_phase[b]);
    }
    // Rebuild the negative-frequency half so the inverse transform is real.
    for (std::size_t b = bins; b < window_size; ++b) {
      buffer[b] = std::conj(buffer[window_size - b]);
    }
    fft_inplace(buffer, true);

    const std::size_t out_start = m * synth_hop;
    for (std::size_t i = 0; i < window_size; ++i) {
      out[out_start + i] += buffer[i].real() * window[i];
      envelope[out_start + i] += window[i] * window[i];
    }
  }

  AudioClip result;
  result.sample_rate = clip.sample_rate;
  result.samples.resize(target_len);
  for (std::size_t i = 0; i < target_len; ++i) {
    const std::size_t j = offset + i;
    result.samples[i] = envelope[j] > 1e-9 ? out[j] / envelope[j] : 0.0;
  }
  return result;
}

std::string format_grid_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

AudioClip damp_low(const AudioClip& clip, double cutoff_hz, double atten_db) {
  if (clip.samples.empty()) throw DomainError("damp_low: empty clip");
  if (!(cutoff_hz > 0.0) || cutoff_hz >= clip.sample_rate / 2.0) {
    throw DomainError("damp_low: cutoff must lie in (0, sample_rate/2)");
  }
  if (atten_db > 0.0) throw DomainError("damp_low: attenuation must be <= 0 dB");

  // RBJ low-shelf biquad, shelf slope 1: gain atten_db at DC, unity at Nyquist.
  const double A = std::pow(10.0, atten_db / 40.0);
  const double w0 = 2.0 * std::numbers::pi * cutoff_hz / clip.sample_rate;
  const double cw = std::cos(w0);
  const double alpha = std::sin(w0) / 2.0 * std::numbers::sqrt2;
  const double two_sqrt_a_alpha = 2.0 * std::sqrt(A) * alpha;

  const double b0 = A * ((A + 1.0) - (A - 1.0) * cw + two_sqrt_a_alpha);
  const double b1 = 2.0 * A * ((A - 1.0) - (A + 1.0) * cw);
  const double b2 = A * ((A + 1.0) - (A - 1.0) * cw - two_sqrt_a_alpha);
  const double a0 = (A + 1.0) + (A - 1.0) * cw + two_sqrt_a_alpha;
  const double a1 = -2.0 * ((A - 1.0) + (A + 1.0) * cw);
  const double a2 = (A + 1.0) + (A - 1.0) * cw - two_sqrt_a_alpha;

  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples.resize(clip.samples.size());
  // Direct form II transposed.
  double z1 = 0.0, z2 = 0.0;
  const double n0 = b0 / a0, n1 = b1 / a0, n2 = b2 / a0;
  const double d1 = a1 / a0, d2 = a2 / a0;
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    const double x = clip.samples[i];
    const double y = n0 * x + z1;
    z1 = n1 * x - d1 * y + z2;
    z2 = n2 * x - d2 * y;
    out.samples[i] = y;
  }
  return clamp_samples(std::move(out), "damp_low");
}

AudioClip time_stretch(const AudioClip& clip, double factor, StretchMode mode,
                       std::size_t window_size) {
  if (clip.samples.empty()) throw DomainError("time_stretch: empty clip");
  if (!(factor >= 1.0 && factor <= 3.0)) {
    throw DomainError("time_stretch: factor must lie in [1.0, 3.0]");
  }
  AudioClip out = mode == StretchMode::Resample ? stretch_resample(clip, factor)
                                                : stretch_phase_vocoder(clip, factor, window_size);
  return clamp_samples(std::move(out), "time_stretch");
}

std::vector<SweepEntry> generate_sweep(const AudioClip& clip, const std::string& stem,
                                       const std::vector<double>& cutoffs,
                                       const std::vector<double>& attens,
                                       const std::vector<double>& factors, StretchMode mode,
                                       const std::filesystem::path& out_dir) {
  if (cutoffs.empty() || attens.empty() || factors.empty()) {
    throw DomainError("generate_sweep: all parameter grids must be nonempty");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (!std::filesystem::is_directory(out_dir)) {
    throw DataError("generate_sweep: cannot create output directory " + out_dir.string());
  }

  std::vector<SweepEntry> entries;
  entries.reserve(cutoffs.size() * attens.size() * factors.size());
  for (double cutoff : cutoffs) {
    for (double atten : attens) {
      const AudioClip shelved = damp_low(clip, cutoff, atten);
      for (double factor : factors) {
        SweepEntry entry;
        entry.params = {cutoff, atten, factor, mode};
        entry.file = out_dir / (stem + "_c" + format_grid_value(cutoff) + "_a" +
                                format_grid_value(atten) + "_x" + format_grid_value(factor) +
                                ".wav");
        write_wav(entry.file, time_stretch(shelved, factor, mode));
        entries.push_back(std::move(entry));
      }
    }
  }
  return entries;
}

void write_sweep_manifest(std::ostream& out, const std::vector<SweepEntry>& entries) {
  out << "file,cutoff_hz,atten_db,factor,mode\n";
  for (const SweepEntry& entry : entries) {
    out << csv_escape(entry.file.filename().string()) << ','
        << format_double(entry.params.damp_cutoff) << ','
        << format_double(entry.params.damp_atten_db) << ','
        << format_double(entry.params.stretch_factor) << ',' << to_string(entry.params.mode)
        << '\n';
  }
}

}  // namespace illusion::audio
