#include "illusion/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "illusion/common.hpp"

namespace illusion {

std::size_t CalibrationTable::total_count() const {
  std::size_t n = 0;
  for (const CalibrationBin& bin : bins) n += bin.count;
  return n;
}

CalibrationTable calibrate(const std::vector<std::pair<double, double>>& pairs,
                           const std::vector<double>& edges) {
  if (pairs.empty()) throw DomainError("calibrate: no (predicted, observed) pairs");
  if (!std::is_sorted(edges.begin(), edges.end()) ||
      std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw DomainError("calibrate: edges must be strictly ascending");
  }

  const double inf = std::numeric_limits<double>::infinity();
  CalibrationTable table;
  table.edges = edges;
  const std::size_t nbins = edges.size() + 1;
  std::vector<double> sums(nbins, 0.0);
  std::vector<std::size_t> counts(nbins, 0);

  for (const auto& [predicted, observed] : pairs) {
    // Number of edges <= predicted selects the half-open [e_i, e_{i+1}) bin.
    std::size_t bin = std::upper_bound(edges.begin(), edges.end(), predicted) - edges.begin();
    sums[bin] += observed;
    ++counts[bin];
  }

  for (std::size_t b = 0; b < nbins; ++b) {
    CalibrationBin bin;
    bin.low = b == 0 ? -inf : edges[b - 1];
    bin.high = b == edges.size() ? inf : edges[b];
    bin.count = counts[b];
    bin.mean_observed = counts[b] == 0 ? std::numeric_limits<double>::quiet_NaN()
                                       : sums[b] / static_cast<double>(counts[b]);
    table.bins.push_back(bin);
  }
  return table;
}

void write_calibration_csv(std::ostream& out, const CalibrationTable& table) {
  out << "bin_low,bin_high,mean_observed,count\n";
  for (const CalibrationBin& bin : table.bins) {
    auto bound = [](double v) {
      if (std::isinf(v)) return std::string(v < 0 ? "-inf" : "inf");
      return format_double(v);
    };
    out << bound(bin.low) << ',' << bound(bin.high) << ','
        << (bin.count == 0 ? "nan" : format_double(bin.mean_observed)) << ',' << bin.count
        << '\n';
  }
}

}  // namespace illusion
