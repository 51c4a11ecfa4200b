#include "layersum/descriptive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace layersum {

namespace {

double quantile_type7(std::span<const double> sorted, double p) {
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double h = static_cast<double>(n - 1) * p;
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= n) return sorted[n - 1];
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

Quartiles quartiles_sorted(std::span<const double> sorted) {
  if (sorted.empty()) throw std::invalid_argument("quartiles: empty input");
  return {quantile_type7(sorted, 0.25), quantile_type7(sorted, 0.50),
          quantile_type7(sorted, 0.75)};
}

Quartiles quartiles(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return quartiles_sorted(values);
}

Histogram histogram(std::span<const double> values, unsigned bins) {
  if (values.empty()) throw std::invalid_argument("histogram: empty input");
  if (bins < 1) throw std::invalid_argument("histogram: bins must be >= 1");

  const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  double lo = *min_it;
  double hi = *max_it;
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double width = (hi - lo) / static_cast<double>(bins);

  Histogram h;
  h.bin_edges.resize(bins + 1);
  for (unsigned b = 0; b <= bins; ++b)
    h.bin_edges[b] = lo + width * static_cast<double>(b);
  h.bin_edges[bins] = hi;  // exact right edge regardless of roundoff
  h.counts.assign(bins, 0);

  for (double v : values) {
    auto idx = static_cast<std::int64_t>((v - lo) / width);
    if (idx < 0) idx = 0;
    if (idx >= static_cast<std::int64_t>(bins)) idx = bins - 1;
    ++h.counts[static_cast<std::size_t>(idx)];
  }
  return h;
}

BoxplotStats boxplot_stats_sorted(std::span<const double> sorted) {
  if (sorted.empty()) throw std::invalid_argument("boxplot_stats: empty input");
  const Quartiles q = quartiles_sorted(sorted);
  const double iqr = q.q3 - q.q1;
  BoxplotStats stats;
  stats.min = sorted.front();
  stats.q1 = q.q1;
  stats.median = q.median;
  stats.q3 = q.q3;
  stats.max = sorted.back();
  stats.lower_fence = q.q1 - 1.5 * iqr;
  stats.upper_fence = q.q3 + 1.5 * iqr;
  for (double v : sorted)
    if (v < stats.lower_fence || v > stats.upper_fence) ++stats.outlier_count;
  return stats;
}

BoxplotStats boxplot_stats(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return boxplot_stats_sorted(values);
}

}  // namespace layersum
