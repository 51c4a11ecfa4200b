#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "layersum/descriptive.hpp"
#include "layersum/summary.hpp"

namespace layersum {

/// Which sets a series export covers. "pooled" merges every value of the run
/// into one series (set_index 0 in the output); "twelve" picks twelve set
/// indices evenly spread over [1, S].
struct SetSelection {
  enum class Mode { pooled, all, twelve, list };
  Mode mode = Mode::all;
  std::vector<std::uint32_t> indices;  // list mode only
};

/// Parses "pooled" | "all" | "twelve" | "i,j,k". Throws config_error.
SetSelection parse_selection(const std::string& text);

/// Concrete 1-based set indices for a selection (empty for pooled).
/// Throws config_error when a listed index is outside [1, total_sets].
std::vector<std::uint32_t> resolve_selection(const SetSelection& selection,
                                             std::uint32_t total_sets);

/// CSV bodies for the three plot-ready series.
std::string histogram_csv(
    std::span<const std::pair<std::uint32_t, Histogram>> series);
std::string boxplot_csv(std::span<const SetSummary> summaries,
                        std::span<const std::uint32_t> indices);
std::string stddev_percent_csv(std::span<const SetSummary> summaries);

}  // namespace layersum
