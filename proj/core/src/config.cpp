#include "layersum/config.hpp"

#include <limits>

namespace layersum {

const char* to_string(LayerKind layer) noexcept {
  switch (layer) {
    case LayerKind::fixed:
      return "fixed";
    case LayerKind::layer1:
      return "1";
    case LayerKind::layer2:
      return "2";
    case LayerKind::layer3:
      return "3";
  }
  return "?";
}

LayerKind layer_from_string(const std::string& text) {
  if (text == "fixed") return LayerKind::fixed;
  if (text == "1" || text == "layer1") return LayerKind::layer1;
  if (text == "2" || text == "layer2") return LayerKind::layer2;
  if (text == "3" || text == "layer3") return LayerKind::layer3;
  throw config_error("layer must be one of {1|2|3|fixed}, got '" + text + "'");
}

void validate(const RunConfig& cfg) {
  constexpr std::uint64_t kU32Max = std::numeric_limits<std::uint32_t>::max();
  constexpr std::uint64_t kSumBound = std::uint64_t(1) << 63;  // exclusive

  if (cfg.max_number < 2) throw config_error("max_number must be >= 2");
  if (cfg.total_numbers < 1) throw config_error("numbers must be >= 1");
  if (cfg.total_sets < 1) throw config_error("sets must be >= 1");
  if (cfg.total_additions < 1) throw config_error("additions must be >= 1");
  if (cfg.workers < 1) throw config_error("workers must be >= 1");

  // Raw-dump records store these as 32-bit fields.
  if (cfg.total_sets > kU32Max) throw config_error("sets must fit in 32 bits");
  if (cfg.total_numbers > kU32Max) throw config_error("numbers must fit in 32 bits");
  if (cfg.total_additions > kU32Max)
    throw config_error("additions must fit in 32 bits");

  std::uint64_t k_max = cfg.total_additions;
  if (cfg.layer == LayerKind::fixed) {
    if (cfg.fixed_k < 1) throw config_error("k must be >= 1 in fixed mode");
    k_max = cfg.fixed_k;
  }
  const auto product =
      static_cast<unsigned __int128>(k_max) * cfg.max_number;
  if (product >= kSumBound)
    throw config_error(
        cfg.layer == LayerKind::fixed
            ? "k * max_number exceeds the 64-bit sum bound"
            : "additions * max_number exceeds the 64-bit sum bound");
}

void apply_profile(RunConfig& cfg, const std::string& name) {
  if (name == "paper") {
    cfg.max_number = 100;
    cfg.total_numbers = 1000;
    cfg.total_sets = 10000;
    cfg.total_additions = 10000;
  } else if (name == "desk") {
    cfg.max_number = 100;
    cfg.total_numbers = 1000;
    cfg.total_sets = 200;
    cfg.total_additions = 10000;
  } else {
    throw config_error("profile must be one of {paper|desk}, got '" + name + "'");
  }
}

}  // namespace layersum
