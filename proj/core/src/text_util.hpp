#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace layersum::detail {

// Shortest round-trip decimal rendering; locale-independent, so emitted CSV
// bytes are identical across runs and hosts.
inline std::string fmt_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

inline std::string fmt_u64(std::uint64_t value) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

}  // namespace layersum::detail
