#pragma once

#include <cstdint>
#include <optional>

#include "layersum/config.hpp"
#include "layersum/layers.hpp"
#include "layersum/moments.hpp"

namespace layersum {

/// Per-set statistics, percent metrics and normality diagnostics.
/// Normality fields are NaN when a test's preconditions (length, nonzero
/// spread) fail; the Shapiro-Wilk fields are absent outside 3 <= n <= 5000.
struct SetSummary {
  std::uint32_t set_index = 0;
  std::optional<std::uint64_t> realized_k;
  std::uint64_t count = 0;

  double mean = 0.0;
  double median = 0.0;
  double std_dev = 0.0;  // sample, n-1
  double skewness = 0.0;
  double excess_kurtosis = 0.0;

  double min = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  std::uint64_t outlier_count = 0;  // beyond the 1.5*IQR fences

  double pct_mean = 0.0;
  double pct_median = 0.0;
  double pct_std = 0.0;

  double jb_stat = 0.0;
  double jb_p = 0.0;
  std::optional<double> sw_w;
  std::optional<double> sw_p;
  double ks_d = 0.0;
  double ks_p = 0.0;
};

struct PercentMetrics {
  double pct_mean = 0.0;
  double pct_median = 0.0;
  double pct_std = 0.0;
};

/// Percent metrics against the attainable-range basis: realized summand
/// count * max_number for fixed/layer1/layer2 sets, and
/// total_additions * max_number for layer3 sets.
PercentMetrics percent_metrics(const SetSummary& summary, const RunConfig& cfg);

struct SetAnalysis {
  SetSummary summary;
  Moments moments;
};

/// Full per-set pipeline: streaming moments, order statistics, fences,
/// normality diagnostics against the fitted normal, percent metrics.
SetAnalysis analyze_set(const SetResult& set, const RunConfig& cfg);

}  // namespace layersum
