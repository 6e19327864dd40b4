#include "illusion/trials.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "illusion/rng.hpp"

namespace illusion {

double observed_illusionability(double baseline_accuracy, double illusory_accuracy) {
  return baseline_accuracy - illusory_accuracy;
}

std::vector<LabeledWord> parse_labeled_words(std::istream& in,
                                             const PronunciationLexicon& lexicon) {
  std::vector<LabeledWord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (line_no == 1 && view.substr(0, 4) == "word") continue;  // header
    std::vector<std::string> fields = split(view, ',');
    if (fields.size() != 3) {
      throw DataError("labeled data line " + std::to_string(line_no) +
                      ": expected word,baseline_accuracy,illusory_accuracy");
    }
    LabeledWord row;
    row.word = normalize_word(fields[0]);
    double baseline, illusory;
    try {
      baseline = std::stod(fields[1]);
      illusory = std::stod(fields[2]);
    } catch (const std::exception&) {
      throw DataError("labeled data line " + std::to_string(line_no) + ": bad accuracy value");
    }
    if (baseline < 0.0 || baseline > 1.0 || illusory < 0.0 || illusory > 1.0) {
      throw DataError("labeled data line " + std::to_string(line_no) +
                      ": accuracies must lie in [0,1]");
    }
    row.observed = observed_illusionability(baseline, illusory);
    row.features = extract_features(phonemize(row.word, lexicon));
    out.push_back(std::move(row));
  }
  if (out.empty()) throw DataError("labeled data file contains no rows");
  return out;
}

std::vector<LabeledWord> load_labeled_words(const std::filesystem::path& csv_path,
                                            const PronunciationLexicon& lexicon) {
  std::ifstream in(csv_path);
  if (!in) throw DataError("cannot read labeled data file: " + csv_path.string());
  return parse_labeled_words(in, lexicon);
}

double CoefficientAverage::predict(const IllusionFeatureVector& features) const {
  double out = intercept;
  for (std::size_t i = 0; i < coefficients.size() && i < features.bits.size(); ++i) {
    if (features.bits[i]) out += coefficients[i];
  }
  return out;
}

std::vector<std::uint32_t> trial_permutation(std::size_t n, std::uint64_t master_seed,
                                             std::uint32_t trial_index) {
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(derive_seed(derive_seed(master_seed, trial_index), 0));
  deterministic_shuffle(order, rng);
  return order;
}

namespace {

double safe_pearson(std::span<const double> a, std::span<const double> b) {
  try {
    return pearson(a, b);
  } catch (const DomainError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

struct MeanStd {
  double mean;
  double std;
};

// Mean and sample standard deviation over the finite entries.
MeanStd finite_mean_std(const std::vector<double>& values) {
  std::vector<double> finite;
  finite.reserve(values.size());
  for (double v : values) {
    if (std::isfinite(v)) finite.push_back(v);
  }
  if (finite.empty()) return {std::numeric_limits<double>::quiet_NaN(),
                              std::numeric_limits<double>::quiet_NaN()};
  double mean = std::accumulate(finite.begin(), finite.end(), 0.0) /
                static_cast<double>(finite.size());
  if (finite.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : finite) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(finite.size() - 1))};
}

TrialRecord run_one_trial(const Matrix& X, const std::vector<double>& y,
                          const TrialConfig& config, std::uint32_t trial_index) {
  const std::size_t n = y.size();
  const auto train_size =
      static_cast<std::size_t>(std::ceil(config.train_fraction * static_cast<double>(n)));

  std::vector<std::uint32_t> order = trial_permutation(n, config.master_seed, trial_index);
  std::vector<std::uint32_t> train_idx(order.begin(), order.begin() + train_size);
  std::vector<std::uint32_t> test_idx(order.begin() + train_size, order.end());

  Matrix train_X(train_idx.size(), X.cols);
  std::vector<double> train_y(train_idx.size());
  for (std::size_t i = 0; i < train_idx.size(); ++i) {
    std::copy_n(X.data.begin() + train_idx[i] * X.cols, X.cols,
                train_X.data.begin() + i * X.cols);
    train_y[i] = y[train_idx[i]];
  }

  const std::uint64_t cv_seed = derive_seed(derive_seed(config.master_seed, trial_index), 1);
  const double lambda = select_lambda(train_X, train_y, config.lambda_grid, config.cv_folds,
                                      cv_seed, config.selection);

  TrialRecord record;
  record.model = fit_ridge(train_X, train_y, lambda);

  std::vector<double> train_pred(train_idx.size());
  for (std::size_t i = 0; i < train_idx.size(); ++i) {
    train_pred[i] = record.model.predict(train_X.row(i));
  }
  record.train_corr = safe_pearson(train_pred, train_y);

  std::vector<double> test_pred(test_idx.size()), test_y(test_idx.size());
  for (std::size_t i = 0; i < test_idx.size(); ++i) {
    test_pred[i] = record.model.predict(X.row(test_idx[i]));
    test_y[i] = y[test_idx[i]];
  }
  record.test_corr = safe_pearson(test_pred, test_y);

  std::sort(test_idx.begin(), test_idx.end());
  record.test_indices = std::move(test_idx);
  return record;
}

}  // namespace

std::vector<std::string> TrialEnsemble::flagged_words() const {
  std::vector<std::string> out;
  for (const LabeledWord& row : data) {
    auto it = by_word.find(row.word);
    if (it == by_word.end() || it->second.trials == 0) out.push_back(row.word);
  }
  return out;
}

std::string TrialEnsemble::correlation_summary() const {
  auto pct = [](double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << v * 100.0 << '%';
    return os.str();
  };
  std::ostringstream os;
  os << "train " << pct(train_corr_mean) << "±" << pct(train_corr_std) << ", test "
     << pct(test_corr_mean) << "±" << pct(test_corr_std);
  return os.str();
}

TrialEnsemble run_trials(std::vector<LabeledWord> data, const TrialConfig& config) {
  const std::size_t n = data.size();
  if (n < 8) throw DomainError("run_trials: need at least 8 labeled words");
  if (config.trials < 1) throw DomainError("run_trials: need at least one trial");
  if (!(config.train_fraction > 0.0 && config.train_fraction < 1.0)) {
    throw DomainError("run_trials: train_fraction must lie in (0,1)");
  }
  const auto train_size =
      static_cast<std::size_t>(std::ceil(config.train_fraction * static_cast<double>(n)));
  if (train_size >= n) throw DomainError("run_trials: empty test split");
  if (config.lambda_grid.empty()) throw DomainError("run_trials: empty lambda grid");
  if (config.selection == LambdaSelection::CrossValidation && config.lambda_grid.size() > 1 &&
      (config.cv_folds < 2 || config.cv_folds > train_size)) {
    throw DomainError("run_trials: cv_folds must lie in [2, training split size]");
  }

  std::vector<IllusionFeatureVector> feats(n);
  std::vector<double> targets(n);
  for (std::size_t i = 0; i < n; ++i) {
    feats[i] = data[i].features;
    targets[i] = data[i].observed;
  }
  const Matrix X = Matrix::from_features(feats);

  TrialEnsemble ensemble;
  ensemble.config = config;
  ensemble.data = std::move(data);
  ensemble.per_trial.resize(config.trials);

  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, config.trials));

  // Trials are independent; records land in a preallocated slot per index so
  // the result does not depend on scheduling.
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::atomic<bool> failed{false};
  auto worker = [&](unsigned worker_id) {
    try {
      for (std::uint32_t t = worker_id; t < config.trials; t += threads) {
        if (failed.load(std::memory_order_relaxed)) return;
        ensemble.per_trial[t] = run_one_trial(X, targets, config, t);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
      failed.store(true, std::memory_order_relaxed);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  // Aggregate in trial order (fixed summation order keeps results identical
  // for any thread count).
  const std::size_t p = X.cols;
  std::vector<std::vector<double>> sums(n, std::vector<double>(p + 1, 0.0));
  std::vector<std::uint32_t> counts(n, 0);
  std::vector<double> overall_sum(p + 1, 0.0);
  std::vector<double> train_corrs(config.trials), test_corrs(config.trials);
  for (std::uint32_t t = 0; t < config.trials; ++t) {
    const TrialRecord& record = ensemble.per_trial[t];
    train_corrs[t] = record.train_corr;
    test_corrs[t] = record.test_corr;
    for (std::size_t j = 0; j < p; ++j) overall_sum[j] += record.model.coefficients[j];
    overall_sum[p] += record.model.intercept;
    for (std::uint32_t idx : record.test_indices) {
      auto& sum = sums[idx];
      for (std::size_t j = 0; j < p; ++j) sum[j] += record.model.coefficients[j];
      sum[p] += record.model.intercept;
      ++counts[idx];
    }
  }

  auto to_average = [p](const std::vector<double>& sum, std::uint32_t count) {
    CoefficientAverage avg;
    avg.trials = count;
    avg.coefficients.assign(p, 0.0);
    if (count == 0) return avg;
    for (std::size_t j = 0; j < p; ++j) {
      avg.coefficients[j] = sum[j] / static_cast<double>(count);
    }
    avg.intercept = sum[p] / static_cast<double>(count);
    return avg;
  };

  ensemble.overall = to_average(overall_sum, config.trials);
  for (std::size_t i = 0; i < n; ++i) {
    ensemble.by_word.emplace(ensemble.data[i].word, to_average(sums[i], counts[i]));
  }

  const MeanStd train_stats = finite_mean_std(train_corrs);
  const MeanStd test_stats = finite_mean_std(test_corrs);
  ensemble.train_corr_mean = train_stats.mean;
  ensemble.train_corr_std = train_stats.std;
  ensemble.test_corr_mean = test_stats.mean;
  ensemble.test_corr_std = test_stats.std;
  return ensemble;
}

double predict_oof(const TrialEnsemble& ensemble, const std::string& word,
                   const IllusionFeatureVector& features) {
  auto it = ensemble.by_word.find(word);
  if (it == ensemble.by_word.end()) {
    // Word never appeared in the data: exclusion is vacuous, use all trials.
    return ensemble.overall.predict(features);
  }
  if (it->second.trials == 0) {
    throw DomainError("predict_oof: word \"" + word + "\" has no out-of-fold trials");
  }
  return it->second.predict(features);
}

}  // namespace illusion
