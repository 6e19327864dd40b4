#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "illusion/common.hpp"
#include "illusion/features.hpp"

namespace illusion {

// Minimal dense row-major matrix, enough for the regression paths.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

  static Matrix from_features(std::span<const IllusionFeatureVector> features);
};

// Linear model with an unpenalized intercept.
struct RidgeModel {
  std::vector<double> coefficients;
  double intercept = 0.0;
  double lambda = 0.0;

  double predict(std::span<const double> x) const;
  double predict(const IllusionFeatureVector& features) const;
};

// Unique minimizer of  sum_i (y_i - x_i . beta - b)^2 + lambda * |beta|^2
// with the intercept b unpenalized, solved in closed form via the regularized
// normal equations (Cholesky on the augmented Gram matrix).
RidgeModel fit_ridge(const Matrix& X, const std::vector<double>& y, double lambda);

enum class LambdaSelection : std::uint8_t {
  CrossValidation,  // k-fold CV inside the training data (default)
  TrainingMse,      // raw training MSE; always favors the smallest lambda
};

// Deterministic fold assignment: a seeded permutation of 0..n-1 dealt
// round-robin into `folds` groups.
std::vector<std::vector<std::uint32_t>> make_folds(std::size_t n, std::size_t folds,
                                                   std::uint64_t seed);

// Grid value minimizing the selection criterion; ties (within 1e-12) break
// toward the larger lambda.
double select_lambda(const Matrix& X, const std::vector<double>& y,
                     const std::vector<double>& grid, std::size_t folds, std::uint64_t seed,
                     LambdaSelection selection = LambdaSelection::CrossValidation);

// Pearson correlation; throws DomainError on length < 2 or constant input.
double pearson(std::span<const double> a, std::span<const double> b);

}  // namespace illusion
