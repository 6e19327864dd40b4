#include "illusion/audio/profile.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace illusion::audio {

namespace {
constexpr double kEnergyFloor = 1e-12;
constexpr double kSilenceRatio = 1e-10;
}  // namespace

SpectralProfile spectral_profile(const Spectrogram& spec, double cutoff_hz) {
  if (!(cutoff_hz > 0.0) || cutoff_hz >= spec.sample_rate / 2.0) {
    throw DomainError("spectral_profile: cutoff must lie in (0, sample_rate/2)");
  }

  // Band split: bins strictly below the cutoff frequency are "low".
  std::size_t low_bins = 0;
  while (low_bins < spec.bins && spec.bin_frequency(low_bins) < cutoff_hz) ++low_bins;

  std::vector<double> frame_energy(spec.frames, 0.0);
  double max_energy = 0.0;
  for (std::size_t f = 0; f < spec.frames; ++f) {
    double total = 0.0;
    for (std::size_t b = 0; b < spec.bins; ++b) {
      const double m = spec.at(f, b);
      total += m * m;
    }
    frame_energy[f] = total;
    max_energy = std::max(max_energy, total);
  }

  const double silence_floor = kSilenceRatio * max_energy;
  std::vector<double> ratios;
  double centroid_num = 0.0, centroid_den = 0.0;
  for (std::size_t f = 0; f < spec.frames; ++f) {
    if (frame_energy[f] <= silence_floor || frame_energy[f] == 0.0) continue;
    double low = 0.0, high = 0.0;
    for (std::size_t b = 0; b < spec.bins; ++b) {
      const double e = spec.at(f, b) * spec.at(f, b);
      (b < low_bins ? low : high) += e;
      centroid_num += spec.bin_frequency(b) * e;
      centroid_den += e;
    }
    ratios.push_back(std::log((low + kEnergyFloor) / (high + kEnergyFloor)));
  }
  if (ratios.empty()) throw DataError("spectral_profile: every frame is silent");

  SpectralProfile profile;
  profile.cutoff = cutoff_hz;
  double mean = 0.0;
  for (double r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double var = 0.0;
  for (double r : ratios) var += (r - mean) * (r - mean);
  profile.ratio_mean = mean;
  profile.ratio_std = std::sqrt(var / static_cast<double>(ratios.size()));
  profile.centroid = centroid_num / centroid_den;
  return profile;
}

std::vector<RankedCandidate> rank_candidates(
    const SpectralProfile& reference,
    const std::vector<std::pair<std::string, SpectralProfile>>& candidates) {
  if (candidates.empty()) throw DomainError("rank_candidates: empty candidate list");
  for (const auto& [name, profile] : candidates) {
    if (profile.cutoff != reference.cutoff) {
      throw DomainError("rank_candidates: profile \"" + name +
                        "\" computed with a different cutoff");
    }
  }

  // z-normalization statistics over the candidate set.
  auto field = [](const SpectralProfile& p, int i) {
    return i == 0 ? p.ratio_mean : i == 1 ? p.ratio_std : p.centroid;
  };
  double mean[3] = {0, 0, 0}, std[3] = {0, 0, 0};
  for (const auto& [name, profile] : candidates) {
    for (int i = 0; i < 3; ++i) mean[i] += field(profile, i);
  }
  for (int i = 0; i < 3; ++i) mean[i] /= static_cast<double>(candidates.size());
  for (const auto& [name, profile] : candidates) {
    for (int i = 0; i < 3; ++i) {
      const double d = field(profile, i) - mean[i];
      std[i] += d * d;
    }
  }
  for (int i = 0; i < 3; ++i) {
    std[i] = std::sqrt(std[i] / static_cast<double>(candidates.size()));
    if (std[i] == 0.0) std[i] = 1.0;  // constant feature carries no signal
  }

  std::vector<RankedCandidate> out;
  out.reserve(candidates.size());
  for (const auto& [name, profile] : candidates) {
    double d2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double d = (field(profile, i) - field(reference, i)) / std[i];
      d2 += d * d;
    }
    out.push_back({name, std::sqrt(d2), profile});
  }
  std::sort(out.begin(), out.end(), [](const RankedCandidate& a, const RankedCandidate& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.name < b.name;
  });
  return out;
}

void write_ranking_csv(std::ostream& out, const std::vector<RankedCandidate>& ranking) {
  out << "rank,name,distance,ratio_mean,ratio_std,centroid_hz\n";
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const RankedCandidate& c = ranking[i];
    out << i + 1 << ',' << csv_escape(c.name) << ',' << format_double(c.distance) << ','
        << format_double(c.profile.ratio_mean) << ',' << format_double(c.profile.ratio_std)
        << ',' << format_double(c.profile.centroid) << '\n';
  }
}

}  // namespace illusion::audio
