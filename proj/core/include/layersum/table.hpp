#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "layersum/config.hpp"

namespace layersum {

/// One row of the per-layer first/last-set metrics table, with analytic
/// reference columns: the closed-form mean/std of the set's law and the
/// 5-standard-error sampling half-widths an n-value sample implies.
struct MetricsRow {
  int layer = 0;           // 1, 2, 3
  std::string round;       // "first" | "last"
  std::uint32_t set_index = 0;
  std::uint64_t summands = 0;  // realized k; 0 for layer 3 (per-value counts)
  double mean = 0.0;
  double pct_mean = 0.0;
  double median = 0.0;
  double pct_median = 0.0;
  double std_dev = 0.0;
  double pct_std = 0.0;
  double oracle_mean = 0.0;
  double oracle_std = 0.0;
  double mean_band = 0.0;  // 5 * sigma / sqrt(n)
  double std_band = 0.0;   // 5 * sigma * sqrt((2 + g2) / (4n))
};

/// Generates the first and last set of each layer at the configured scale
/// (six sets total; the other sets are not generated).
std::vector<MetricsRow> metrics_table(const RunConfig& base);

std::string metrics_table_csv(const std::vector<MetricsRow>& rows);

/// Fixed-width text rendering for terminals.
std::string metrics_table_text(const std::vector<MetricsRow>& rows);

}  // namespace layersum
