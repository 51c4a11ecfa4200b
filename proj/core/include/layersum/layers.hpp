#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "layersum/config.hpp"
#include "layersum/rng.hpp"

namespace layersum {

/// One generated set: the final values plus the realized summand count(s).
/// Every value v with summand count k satisfies k <= v <= k * max_number.
struct SetResult {
  std::uint32_t set_index = 0;  // 1-based
  std::vector<std::uint64_t> values;
  std::optional<std::uint64_t> realized_k;               // fixed / layer1 / layer2
  std::optional<std::vector<std::uint32_t>> per_value_k;  // layer3 only
  std::uint64_t draws = 0;  // uniform draws consumed while generating this set
};

/// Sum of exactly k draws from Uniform{1..m}. Consumes exactly k draws.
/// Caller guarantees k >= 1, m >= 2 and k * m <= 2^63 - 1 (config-checked).
inline std::uint64_t sum_of_uniforms(RandomStream& stream, std::uint64_t k,
                                     std::uint64_t m) {
  const auto hi = static_cast<std::int64_t>(m);
  std::uint64_t sum = 0;
  for (std::uint64_t i = 0; i < k; ++i)
    sum += static_cast<std::uint64_t>(stream.next_int(1, hi));
  return sum;
}

/// Progressive summand count for set s: ceil(s*T/S). Equals s when S == T,
/// is nondecreasing in s, and reaches T at s == S.
std::uint64_t layer1_summands(std::uint64_t set_index, const RunConfig& cfg);

/// Per-set generators. Each derives its own stream from (seed, set_index),
/// so any set can be produced independently, in any order, on any thread.
SetResult generate_fixed_set(const RunConfig& cfg, std::uint32_t set_index);
SetResult generate_layer1_set(const RunConfig& cfg, std::uint32_t set_index);
SetResult generate_layer2_set(const RunConfig& cfg, std::uint32_t set_index);
SetResult generate_layer3_set(const RunConfig& cfg, std::uint32_t set_index);

/// Dispatch on cfg.layer.
SetResult generate_set(const RunConfig& cfg, std::uint32_t set_index);

}  // namespace layersum
