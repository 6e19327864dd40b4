#include <benchmark/benchmark.h>

#include "illusion/ridge.hpp"
#include "illusion/rng.hpp"
#include "illusion/synthetic.hpp"
#include "illusion/trials.hpp"

using namespace illusion;

namespace {

Matrix random_features(std::size_t rows, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Matrix m(rows, kIllusionFeatureCount);
  for (double& v : m.data) v = rng.next_double() < 0.15 ? 1.0 : 0.0;
  return m;
}

std::vector<double> random_targets(std::size_t rows, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> y(rows);
  for (double& v : y) v = 0.1 + 0.2 * rng.next_gaussian();
  return y;
}

}  // namespace

static void BM_FitRidge(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const Matrix X = random_features(rows, 1);
  const std::vector<double> y = random_targets(rows, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_ridge(X, y, 1.0));
  }
}
BENCHMARK(BM_FitRidge)->Arg(50)->Arg(200)->Arg(500);

static void BM_SelectLambda(benchmark::State& state) {
  const Matrix X = random_features(200, 3);
  const std::vector<double> y = random_targets(200, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(select_lambda(X, y, {0.1, 1.0, 10.0, 100.0}, 5, 7));
  }
}
BENCHMARK(BM_SelectLambda);

static void BM_RunTrials(benchmark::State& state) {
  const auto data = make_synthetic_dataset({.words = 200, .seed = 5}).data;
  TrialConfig config;
  config.trials = static_cast<std::uint32_t>(state.range(0));
  config.master_seed = 9;
  config.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trials(data, config));
  }
}
BENCHMARK(BM_RunTrials)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
