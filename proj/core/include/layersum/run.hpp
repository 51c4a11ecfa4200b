#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "layersum/config.hpp"
#include "layersum/layers.hpp"
#include "layersum/moments.hpp"
#include "layersum/summary.hpp"

namespace layersum {

/// Optional per-set consumer. Invocations are serialized but may arrive in
/// any set order; consumers that need ordered output must collect by index.
using SetSink = std::function<void(const SetResult&)>;

struct RunOutcome {
  std::vector<SetSummary> summaries;  // ordered by set_index
  Moments pooled;                     // merged over every value of every set
  std::uint64_t total_draws = 0;
  double wall_seconds = 0.0;
};

/// Generates and analyzes sets 1..total_sets across cfg.workers threads.
/// Each set derives its stream from (seed, set_index) and the pooled moments
/// are folded in index order, so the outcome is a pure function of the config
/// regardless of worker count or scheduling.
RunOutcome generate_run(const RunConfig& cfg, const SetSink& sink = {});

}  // namespace layersum
