#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace layersum {

struct Quartiles {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
};

/// Type-7 linear-interpolation quantiles: h = (n-1)p, interpolate between the
/// floor(h) and floor(h)+1 order statistics. Input must be sorted ascending.
/// Throws std::invalid_argument on empty input.
Quartiles quartiles_sorted(std::span<const double> sorted);

/// Convenience overload that sorts a copy.
Quartiles quartiles(std::vector<double> values);

struct Histogram {
  std::vector<double> bin_edges;      // length bins + 1, strictly increasing
  std::vector<std::uint64_t> counts;  // length bins; sums to the input size
};

/// Equal-width bins spanning [min, max]; the final bin is right-inclusive.
/// A zero-range input is binned over [x - 0.5, x + 0.5].
Histogram histogram(std::span<const double> values, unsigned bins);

struct BoxplotStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double lower_fence = 0.0;  // q1 - 1.5 * IQR
  double upper_fence = 0.0;  // q3 + 1.5 * IQR
  std::uint64_t outlier_count = 0;
};

BoxplotStats boxplot_stats(std::vector<double> values);
BoxplotStats boxplot_stats_sorted(std::span<const double> sorted);

}  // namespace layersum
