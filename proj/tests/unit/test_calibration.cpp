#include <doctest.h>

#include <cmath>
#include <sstream>

#include "illusion/calibration.hpp"
#include "illusion/common.hpp"
#include "illusion/reference.hpp"

using namespace illusion;

TEST_SUITE_BEGIN("calibration");

TEST_CASE("reference calibration table reproduces through binning") {
  // Pairs constructed so each default bin averages to the published value.
  std::vector<std::pair<double, double>> pairs = {
      {0.02, 0.00}, {0.05, 0.08},                // < 0.1 -> mean 0.04
      {0.12, 0.10}, {0.18, 0.18},                // [0.1, 0.2) -> 0.14
      {0.22, 0.25}, {0.28, 0.29},                // [0.2, 0.3) -> 0.27
      {0.35, 0.45}, {0.60, 0.55},                // >= 0.3 -> 0.50
  };
  const CalibrationTable table = calibrate(pairs, {0.1, 0.2, 0.3});
  REQUIRE(table.bins.size() == 4);
  for (std::size_t b = 0; b < 4; ++b) {
    CHECK(table.bins[b].count == 2);
    CHECK(table.bins[b].mean_observed ==
          doctest::Approx(reference::kCalibrationBinMeans[b]).epsilon(1e-12));
  }
  CHECK(table.total_count() == pairs.size());
}

TEST_CASE("identical pairs land in one bin") {
  std::vector<std::pair<double, double>> pairs(5, {0.05, 0.05});
  const CalibrationTable table = calibrate(pairs);
  CHECK(table.bins[0].count == 5);
  CHECK(table.bins[0].mean_observed == doctest::Approx(0.05));
  CHECK(table.bins[1].count == 0);
  CHECK(std::isnan(table.bins[1].mean_observed));
}

TEST_CASE("edge values belong to the right-hand bin") {
  std::vector<std::pair<double, double>> pairs = {{0.1, 1.0}, {0.3, 3.0}};
  const CalibrationTable table = calibrate(pairs, {0.1, 0.2, 0.3});
  CHECK(table.bins[0].count == 0);
  CHECK(table.bins[1].count == 1);  // 0.1 in [0.1, 0.2)
  CHECK(table.bins[3].count == 1);  // 0.3 in [0.3, inf)
}

TEST_CASE("counts sum to the pair count") {
  std::vector<std::pair<double, double>> pairs;
  for (int i = 0; i < 137; ++i) pairs.emplace_back(i * 0.004, 0.0);
  CHECK(calibrate(pairs).total_count() == pairs.size());
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(calibrate({}), DomainError);
  CHECK_THROWS_AS(calibrate({{0.1, 0.1}}, {0.2, 0.2}), DomainError);
  CHECK_THROWS_AS(calibrate({{0.1, 0.1}}, {0.3, 0.2}), DomainError);
}

TEST_CASE("CSV report format") {
  std::vector<std::pair<double, double>> pairs = {{0.05, 0.04}, {0.5, 0.5}};
  std::ostringstream out;
  write_calibration_csv(out, calibrate(pairs, {0.1}));
  CHECK(out.str() ==
        "bin_low,bin_high,mean_observed,count\n"
        "-inf,0.1,0.04,1\n"
        "0.1,inf,0.5,1\n");
}

TEST_SUITE_END();
