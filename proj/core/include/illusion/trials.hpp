#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "illusion/features.hpp"
#include "illusion/ridge.hpp"

namespace illusion {

// One word with its feature vector and observed illusionability label.
struct LabeledWord {
  std::string word;
  IllusionFeatureVector features;
  double observed = 0.0;  // in [-1, 1]
};

// observed = baseline accuracy - illusory-condition accuracy, so a harmful
// illusion scores positive. Inputs are fractions of correct respondents.
double observed_illusionability(double baseline_accuracy, double illusory_accuracy);

// Labeled data CSV: header `word,baseline_accuracy,illusory_accuracy`,
// accuracies in [0,1]. Features come from phonemizing each word.
std::vector<LabeledWord> load_labeled_words(const std::filesystem::path& csv_path,
                                            const PronunciationLexicon& lexicon);
std::vector<LabeledWord> parse_labeled_words(std::istream& in,
                                             const PronunciationLexicon& lexicon);

struct TrialConfig {
  std::uint32_t trials = 10000;
  double train_fraction = 0.85;
  std::vector<double> lambda_grid = {0.1, 1.0, 10.0, 100.0};
  std::uint64_t master_seed = 0;
  std::uint32_t cv_folds = 5;
  LambdaSelection selection = LambdaSelection::CrossValidation;
  unsigned threads = 0;  // 0 = hardware concurrency; result independent of N
};

struct TrialRecord {
  RidgeModel model;
  std::vector<std::uint32_t> test_indices;
  double train_corr;  // NaN when undefined (constant split)
  double test_corr;
};

// Coefficients averaged over a subset of trials.
struct CoefficientAverage {
  std::vector<double> coefficients;
  double intercept = 0.0;
  std::uint32_t trials = 0;

  double predict(const IllusionFeatureVector& features) const;
};

// Everything produced by the randomized train/test trials. Immutable once
// built; averages keyed by word back the out-of-fold predictor.
struct TrialEnsemble {
  TrialConfig config;
  std::vector<LabeledWord> data;
  std::vector<TrialRecord> per_trial;
  std::unordered_map<std::string, CoefficientAverage> by_word;  // trials excluding the word
  CoefficientAverage overall;                                   // all trials
  double train_corr_mean = 0.0, train_corr_std = 0.0;
  double test_corr_mean = 0.0, test_corr_std = 0.0;

  // Words that never landed out of fold; their prediction is undefined.
  std::vector<std::string> flagged_words() const;

  // "train 91.1±0.6%, test 44.6±28.9%"
  std::string correlation_summary() const;
};

// The deterministic per-trial permutation of 0..n-1; the first
// ceil(train_fraction*n) entries form the training split. Exposed so the
// split statistics are testable without running fits.
std::vector<std::uint32_t> trial_permutation(std::size_t n, std::uint64_t master_seed,
                                             std::uint32_t trial_index);

// For each trial: partition deterministically, select lambda inside the
// training split, fit, and record train/test correlations. Trials run in
// parallel; output is bit-identical for any thread count.
TrialEnsemble run_trials(std::vector<LabeledWord> data, const TrialConfig& config);

// Inference with coefficients averaged over the trials that excluded the
// word from training. Unknown words fall back to the all-trial average;
// known words with zero out-of-fold trials are an error.
double predict_oof(const TrialEnsemble& ensemble, const std::string& word,
                   const IllusionFeatureVector& features);

}  // namespace illusion
