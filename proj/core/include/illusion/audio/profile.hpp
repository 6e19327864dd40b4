#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "illusion/audio/stft.hpp"

namespace illusion::audio {

// Low/high spectral balance of a clip: per-frame log(low energy / high
// energy) summarized by mean and spread, plus the energy-weighted mean
// frequency. Gain-invariant by construction.
struct SpectralProfile {
  double cutoff = 0.0;      // Hz boundary between the bands
  double ratio_mean = 0.0;  // mean over frames of ln(E_low / E_high)
  double ratio_std = 0.0;
  double centroid = 0.0;    // Hz
};

// Frames with total energy below 1e-10 of the loudest frame are ignored;
// band energies carry an additive 1e-12 floor so the ratio stays finite.
// Throws when every frame is silent.
SpectralProfile spectral_profile(const Spectrogram& spec, double cutoff_hz);

struct RankedCandidate {
  std::string name;
  double distance;
  SpectralProfile profile;
};

// Euclidean distance on (ratio_mean, ratio_std, centroid) z-normalized with
// statistics of the candidate set; ascending, ties alphabetical. All profiles
// must share the reference cutoff.
std::vector<RankedCandidate> rank_candidates(
    const SpectralProfile& reference,
    const std::vector<std::pair<std::string, SpectralProfile>>& candidates);

// CSV: rank,name,distance,ratio_mean,ratio_std,centroid_hz
void write_ranking_csv(std::ostream& out, const std::vector<RankedCandidate>& ranking);

}  // namespace illusion::audio
