#pragma once

#include <cstdint>
#include <vector>

#include "illusion/trials.hpp"

namespace illusion {

// Generator for synthetic labeled words: random sparse binary feature
// vectors, a sparse true coefficient vector, Gaussian label noise. The real
// per-word labels come from listener studies and are not published, so this
// is the shipped path for end-to-end validation of the training stack.
struct SyntheticConfig {
  std::size_t words = 500;
  double bit_probability = 0.12;  // per-feature Bernoulli rate
  std::size_t support = 6;        // nonzero true coefficients
  double coeff_low = 0.1;
  double coeff_high = 0.5;
  double intercept = 0.02;
  double noise_sigma = 0.05;
  std::uint64_t seed = 1;
};

struct SyntheticDataset {
  std::vector<LabeledWord> data;          // observed = noiseless + noise, clamped to [-1,1]
  std::vector<double> true_coefficients;  // length 30
  double true_intercept = 0.0;
  std::vector<double> noiseless;          // per-word X.beta + intercept, unclamped
};

SyntheticDataset make_synthetic_dataset(const SyntheticConfig& config);

}  // namespace illusion
