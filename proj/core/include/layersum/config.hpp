#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "layersum/rng.hpp"

namespace layersum {

/// Bad or inconsistent run parameters. The message names the offending field.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File or stream failure while emitting results.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Where randomness enters the per-value summand count:
///   fixed  - constant k for every set (single-distribution studies)
///   layer1 - k grows with the set index, ceil(s*T/S), from 1 up to T
///   layer2 - k drawn once per set, uniform on {1..T}
///   layer3 - k drawn per value, uniform on {1..T}
enum class LayerKind { fixed, layer1, layer2, layer3 };

const char* to_string(LayerKind layer) noexcept;
LayerKind layer_from_string(const std::string& text);  // throws config_error

/// All experiment parameters. Defaults are the standard full-scale profile.
struct RunConfig {
  LayerKind layer = LayerKind::layer1;
  std::uint64_t fixed_k = 1;              // summand count, fixed mode only
  std::uint64_t max_number = 100;         // m: each draw is uniform on {1..m}
  std::uint64_t total_numbers = 1000;     // n: values per set
  std::uint64_t total_sets = 10000;       // S
  std::uint64_t total_additions = 10000;  // T: summand-count ceiling
  MasterSeed seed{0};
  unsigned workers = 1;
};

/// Throws config_error (naming the field) if any invariant is violated,
/// including the 64-bit sum bound k_max * max_number <= 2^63 - 1.
void validate(const RunConfig& cfg);

/// Named parameter presets: "paper" (full scale, the defaults) and
/// "desk" (total_sets = 200, minutes -> seconds for CI use).
void apply_profile(RunConfig& cfg, const std::string& name);

}  // namespace layersum
