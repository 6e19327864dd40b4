#include "illusion/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "illusion/rng.hpp"

namespace illusion {

SyntheticDataset make_synthetic_dataset(const SyntheticConfig& config) {
  if (config.words == 0) throw DomainError("make_synthetic_dataset: need at least one word");
  if (config.support > kIllusionFeatureCount) {
    throw DomainError("make_synthetic_dataset: support exceeds feature count");
  }

  SyntheticDataset out;
  out.true_coefficients.assign(kIllusionFeatureCount, 0.0);
  out.true_intercept = config.intercept;

  SplitMix64 coeff_rng(derive_seed(config.seed, 0));
  std::vector<std::size_t> dims(kIllusionFeatureCount);
  std::iota(dims.begin(), dims.end(), 0);
  deterministic_shuffle(dims, coeff_rng);
  for (std::size_t k = 0; k < config.support; ++k) {
    out.true_coefficients[dims[k]] =
        config.coeff_low + (config.coeff_high - config.coeff_low) * coeff_rng.next_double();
  }

  SplitMix64 data_rng(derive_seed(config.seed, 1));
  out.data.reserve(config.words);
  out.noiseless.reserve(config.words);
  for (std::size_t w = 0; w < config.words; ++w) {
    LabeledWord row;
    char name[16];
    std::snprintf(name, sizeof(name), "syn%04zu", w);
    row.word = name;
    row.features.word = row.word;
    double signal = config.intercept;
    for (std::size_t j = 0; j < kIllusionFeatureCount; ++j) {
      if (data_rng.next_double() < config.bit_probability) {
        row.features.bits[j] = 1;
        signal += out.true_coefficients[j];
      }
    }
    const double noisy = signal + config.noise_sigma * data_rng.next_gaussian();
    row.observed = std::clamp(noisy, -1.0, 1.0);
    out.noiseless.push_back(signal);
    out.data.push_back(std::move(row));
  }
  return out;
}

}  // namespace illusion
