#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "illusion/sentence.hpp"
#include "illusion/trials.hpp"

namespace illusion {

// Persisted word-illusionability model: trial-averaged coefficients plus the
// per-word out-of-fold predictions. Serialized as JSON; loading and saving
// the same model is byte-stable.
struct ModelFile {
  std::vector<std::string> feature_names;
  std::vector<double> avg_coefficients;  // over all trials
  double avg_intercept = 0.0;
  std::vector<double> lambda_grid;
  std::uint32_t trials = 0;
  double train_fraction = 0.85;
  std::uint64_t master_seed = 0;
  double train_corr_mean = 0.0, train_corr_std = 0.0;
  double test_corr_mean = 0.0, test_corr_std = 0.0;
  std::map<std::string, double> oof_predictions;
  std::vector<std::string> flagged_words;  // no out-of-fold trials

  WordPredictor predictor() const;
};

ModelFile build_model_file(const TrialEnsemble& ensemble);

std::string serialize_model(const ModelFile& model);
ModelFile parse_model(const std::string& text);

void save_model(const std::filesystem::path& path, const ModelFile& model);
ModelFile load_model(const std::filesystem::path& path);

}  // namespace illusion
