#include "layersum/layers.hpp"

#include <stdexcept>

namespace layersum {

namespace {

void check_set_index(const RunConfig& cfg, std::uint32_t set_index) {
  if (set_index < 1 || set_index > cfg.total_sets)
    throw std::invalid_argument("set_index out of [1, total_sets]");
}

}  // namespace

std::uint64_t layer1_summands(std::uint64_t set_index, const RunConfig& cfg) {
  const auto numer = static_cast<unsigned __int128>(set_index) * cfg.total_additions;
  return static_cast<std::uint64_t>((numer + cfg.total_sets - 1) / cfg.total_sets);
}

SetResult generate_fixed_set(const RunConfig& cfg, std::uint32_t set_index) {
  check_set_index(cfg, set_index);
  RandomStream stream = make_stream(cfg.seed, set_index);
  SetResult result;
  result.set_index = set_index;
  result.values.resize(cfg.total_numbers);
  for (auto& value : result.values)
    value = sum_of_uniforms(stream, cfg.fixed_k, cfg.max_number);
  result.realized_k = cfg.fixed_k;
  result.draws = stream.draw_count();
  return result;
}

SetResult generate_layer1_set(const RunConfig& cfg, std::uint32_t set_index) {
  check_set_index(cfg, set_index);
  RandomStream stream = make_stream(cfg.seed, set_index);
  const std::uint64_t k = layer1_summands(set_index, cfg);
  SetResult result;
  result.set_index = set_index;
  result.values.resize(cfg.total_numbers);
  for (auto& value : result.values)
    value = sum_of_uniforms(stream, k, cfg.max_number);
  result.realized_k = k;
  result.draws = stream.draw_count();
  return result;
}

SetResult generate_layer2_set(const RunConfig& cfg, std::uint32_t set_index) {
  check_set_index(cfg, set_index);
  RandomStream stream = make_stream(cfg.seed, set_index);
  // The set-wide summand count is drawn before any value.
  const auto k = static_cast<std::uint64_t>(
      stream.next_int(1, static_cast<std::int64_t>(cfg.total_additions)));
  SetResult result;
  result.set_index = set_index;
  result.values.resize(cfg.total_numbers);
  for (auto& value : result.values)
    value = sum_of_uniforms(stream, k, cfg.max_number);
  result.realized_k = k;
  result.draws = stream.draw_count();
  return result;
}

SetResult generate_layer3_set(const RunConfig& cfg, std::uint32_t set_index) {
  check_set_index(cfg, set_index);
  RandomStream stream = make_stream(cfg.seed, set_index);
  SetResult result;
  result.set_index = set_index;
  result.values.resize(cfg.total_numbers);
  result.per_value_k.emplace();
  result.per_value_k->resize(cfg.total_numbers);
  // Each value draws its own summand count immediately before its additions.
  for (std::uint64_t j = 0; j < cfg.total_numbers; ++j) {
    const auto k = static_cast<std::uint64_t>(
        stream.next_int(1, static_cast<std::int64_t>(cfg.total_additions)));
    (*result.per_value_k)[j] = static_cast<std::uint32_t>(k);
    result.values[j] = sum_of_uniforms(stream, k, cfg.max_number);
  }
  result.draws = stream.draw_count();
  return result;
}

SetResult generate_set(const RunConfig& cfg, std::uint32_t set_index) {
  switch (cfg.layer) {
    case LayerKind::fixed:
      return generate_fixed_set(cfg, set_index);
    case LayerKind::layer1:
      return generate_layer1_set(cfg, set_index);
    case LayerKind::layer2:
      return generate_layer2_set(cfg, set_index);
    case LayerKind::layer3:
      return generate_layer3_set(cfg, set_index);
  }
  throw std::logic_error("generate_set: unknown layer");
}

}  // namespace layersum
