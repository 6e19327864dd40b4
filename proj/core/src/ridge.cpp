#include "illusion/ridge.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "illusion/rng.hpp"

namespace illusion {

Matrix Matrix::from_features(std::span<const IllusionFeatureVector> features) {
  Matrix m(features.size(), kIllusionFeatureCount);
  for (std::size_t r = 0; r < features.size(); ++r) {
    for (std::size_t c = 0; c < kIllusionFeatureCount; ++c) {
      m.at(r, c) = features[r].bits[c];
    }
  }
  return m;
}

double RidgeModel::predict(std::span<const double> x) const {
  double out = intercept;
  for (std::size_t i = 0; i < coefficients.size() && i < x.size(); ++i) {
    out += coefficients[i] * x[i];
  }
  return out;
}

double RidgeModel::predict(const IllusionFeatureVector& features) const {
  double out = intercept;
  for (std::size_t i = 0; i < coefficients.size() && i < features.bits.size(); ++i) {
    if (features.bits[i]) out += coefficients[i];
  }
  return out;
}

namespace {

// Cholesky solve of a symmetric positive definite system, in place.
std::vector<double> spd_solve(std::vector<double> a, std::vector<double> b, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    double diag = a[j * n + j];
    for (std::size_t k = 0; k < j; ++k) diag -= a[j * n + k] * a[j * n + k];
    if (!(diag > 0.0)) throw DomainError("ridge system is not positive definite");
    diag = std::sqrt(diag);
    a[j * n + j] = diag;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) v -= a[i * n + k] * a[j * n + k];
      a[i * n + j] = v / diag;
    }
  }
  // L z = b
  for (std::size_t i = 0; i < n; ++i) {
    double v = b[i];
    for (std::size_t k = 0; k < i; ++k) v -= a[i * n + k] * b[k];
    b[i] = v / a[i * n + i];
  }
  // L^T x = z
  for (std::size_t i = n; i-- > 0;) {
    double v = b[i];
    for (std::size_t k = i + 1; k < n; ++k) v -= a[k * n + i] * b[k];
    b[i] = v / a[i * n + i];
  }
  return b;
}

double mse_on(const Matrix& X, const std::vector<double>& y, const RidgeModel& model,
              const std::vector<std::uint32_t>& indices) {
  double sum = 0.0;
  for (std::uint32_t idx : indices) {
    double r = y[idx] - model.predict(X.row(idx));
    sum += r * r;
  }
  return indices.empty() ? 0.0 : sum / static_cast<double>(indices.size());
}

Matrix take_rows(const Matrix& X, const std::vector<std::uint32_t>& indices) {
  Matrix out(indices.size(), X.cols);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    std::copy_n(X.data.begin() + indices[r] * X.cols, X.cols, out.data.begin() + r * X.cols);
  }
  return out;
}

std::vector<double> take(const std::vector<double>& v, const std::vector<std::uint32_t>& idx) {
  std::vector<double> out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = v[idx[i]];
  return out;
}

}  // namespace

RidgeModel fit_ridge(const Matrix& X, const std::vector<double>& y, double lambda) {
  if (X.rows == 0 || X.rows != y.size()) {
    throw DomainError("fit_ridge: feature matrix and targets disagree");
  }
  if (!(lambda > 0.0)) throw DomainError("fit_ridge: lambda must be > 0");
  for (double v : X.data) {
    if (!std::isfinite(v)) throw DomainError("fit_ridge: non-finite feature value");
  }
  for (double v : y) {
    if (!std::isfinite(v)) throw DomainError("fit_ridge: non-finite target value");
  }

  // Augmented design [X, 1]; the intercept column carries no penalty.
  const std::size_t p = X.cols;
  const std::size_t n = p + 1;
  std::vector<double> gram(n * n, 0.0);
  std::vector<double> rhs(n, 0.0);
  for (std::size_t r = 0; r < X.rows; ++r) {
    const double* row = X.data.data() + r * p;
    for (std::size_t i = 0; i < p; ++i) {
      if (row[i] == 0.0) continue;
      for (std::size_t j = 0; j <= i; ++j) {
        gram[i * n + j] += row[i] * row[j];
      }
      gram[p * n + i] += row[i];  // intercept column
      rhs[i] += row[i] * y[r];
    }
    rhs[p] += y[r];
  }
  gram[p * n + p] = static_cast<double>(X.rows);
  for (std::size_t i = 0; i < p; ++i) gram[i * n + i] += lambda;
  // Mirror the lower triangle.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) gram[i * n + j] = gram[j * n + i];
  }

  std::vector<double> solution = spd_solve(std::move(gram), std::move(rhs), n);
  RidgeModel model;
  model.intercept = solution[p];
  solution.resize(p);
  model.coefficients = std::move(solution);
  model.lambda = lambda;
  return model;
}

std::vector<std::vector<std::uint32_t>> make_folds(std::size_t n, std::size_t folds,
                                                   std::uint64_t seed) {
  if (folds < 2 || folds > n) throw DomainError("make_folds: need 2 <= folds <= n");
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(seed);
  deterministic_shuffle(order, rng);
  std::vector<std::vector<std::uint32_t>> out(folds);
  for (std::size_t i = 0; i < n; ++i) out[i % folds].push_back(order[i]);
  return out;
}

double select_lambda(const Matrix& X, const std::vector<double>& y,
                     const std::vector<double>& grid, std::size_t folds, std::uint64_t seed,
                     LambdaSelection selection) {
  if (grid.empty()) throw DomainError("select_lambda: empty grid");
  if (grid.size() == 1) return grid.front();

  std::vector<double> scores(grid.size(), 0.0);
  if (selection == LambdaSelection::TrainingMse) {
    std::vector<std::uint32_t> all(X.rows);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      scores[g] = mse_on(X, y, fit_ridge(X, y, grid[g]), all);
    }
  } else {
    const auto fold_sets = make_folds(X.rows, folds, seed);
    for (std::size_t f = 0; f < fold_sets.size(); ++f) {
      std::vector<std::uint32_t> train_idx;
      for (std::size_t g = 0; g < fold_sets.size(); ++g) {
        if (g == f) continue;
        train_idx.insert(train_idx.end(), fold_sets[g].begin(), fold_sets[g].end());
      }
      const Matrix train_X = take_rows(X, train_idx);
      const std::vector<double> train_y = take(y, train_idx);
      for (std::size_t g = 0; g < grid.size(); ++g) {
        const RidgeModel model = fit_ridge(train_X, train_y, grid[g]);
        // Accumulate summed squared error so folds of unequal size weigh
        // by point count.
        for (std::uint32_t idx : fold_sets[f]) {
          double r = y[idx] - model.predict(X.row(idx));
          scores[g] += r * r;
        }
      }
    }
  }

  constexpr double kTie = 1e-12;
  std::size_t best = 0;
  for (std::size_t g = 1; g < grid.size(); ++g) {
    if (scores[g] < scores[best] - kTie ||
        (scores[g] <= scores[best] + kTie && grid[g] > grid[best])) {
      best = g;
    }
  }
  return grid[best];
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw DomainError("pearson: need two equal-length series of length >= 2");
  }
  const double n = static_cast<double>(a.size());
  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mean_a += a[i];
    mean_b += b[i];
  }
  mean_a /= n;
  mean_b /= n;
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0) {
    throw DomainError("pearson: correlation undefined for constant input");
  }
  return std::clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
}

}  // namespace illusion
