#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "layersum/layers.hpp"

namespace layersum {

/// Binary raw-value format: magic "LSUM", format version u16, then per set
/// (in ascending set_index order): set_index u32, realized_k u32 (0 when
/// absent), value count u32, then the values as little-endian u64.
inline constexpr char kRawMagic[4] = {'L', 'S', 'U', 'M'};
inline constexpr std::uint16_t kRawFormatVersion = 1;

void write_raw_binary(const std::filesystem::path& path,
                      std::span<const SetResult> sets);

/// Reads a file produced by write_raw_binary. Throws io_error on any
/// structural problem (bad magic, version, truncation).
std::vector<SetResult> read_raw_binary(const std::filesystem::path& path);

/// CSV alternative: header plus one (set_index,value) line per value.
void write_raw_csv(const std::filesystem::path& path,
                   std::span<const SetResult> sets);

}  // namespace layersum
