#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

namespace illusion {

struct CalibrationBin {
  double low;            // -inf for the first bin
  double high;           // +inf for the last bin
  double mean_observed;  // NaN when the bin is empty
  std::size_t count;
};

// Binned comparison of predicted vs mean observed illusionability.
struct CalibrationTable {
  std::vector<double> edges;
  std::vector<CalibrationBin> bins;

  std::size_t total_count() const;
};

inline constexpr double kDefaultCalibrationEdges[] = {0.1, 0.2, 0.3};

// Groups (predicted, observed) pairs into (-inf,e1), [e1,e2), ..., [ek,inf)
// by predicted value. Empty bins report count 0 and NaN mean.
CalibrationTable calibrate(const std::vector<std::pair<double, double>>& pairs,
                           const std::vector<double>& edges = {0.1, 0.2, 0.3});

// CSV: bin_low,bin_high,mean_observed,count
void write_calibration_csv(std::ostream& out, const CalibrationTable& table);

}  // namespace illusion
