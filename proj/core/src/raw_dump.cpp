#include "layersum/raw_dump.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "layersum/config.hpp"
#include "text_util.hpp"

namespace layersum {

namespace {

static_assert(std::endian::native == std::endian::little,
              "raw dump writer assumes a little-endian host");

template <typename T>
void put(std::ofstream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(value));
}

template <typename T>
T take(std::ifstream& in, const std::filesystem::path& path) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(value));
  if (!in) throw io_error("truncated raw dump: " + path.string());
  return value;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.empty()) throw io_error("empty output path");
  std::error_code ec;
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

void write_raw_binary(const std::filesystem::path& path,
                      std::span<const SetResult> sets) {
  std::ofstream out = open_out(path);
  out.write(kRawMagic, sizeof(kRawMagic));
  put(out, kRawFormatVersion);
  for (const SetResult& set : sets) {
    put(out, set.set_index);
    put(out, static_cast<std::uint32_t>(set.realized_k.value_or(0)));
    put(out, static_cast<std::uint32_t>(set.values.size()));
    out.write(reinterpret_cast<const char*>(set.values.data()),
              static_cast<std::streamsize>(set.values.size() * sizeof(std::uint64_t)));
  }
  if (!out) throw io_error("write failed for " + path.string());
}

std::vector<SetResult> read_raw_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path.string());

  char magic[4];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kRawMagic, sizeof(magic)) != 0)
    throw io_error("not a raw dump (bad magic): " + path.string());
  const auto version = take<std::uint16_t>(in, path);
  if (version != kRawFormatVersion)
    throw io_error("unsupported raw dump version " + std::to_string(version));

  std::vector<SetResult> sets;
  while (in.peek() != std::ifstream::traits_type::eof()) {
    SetResult set;
    set.set_index = take<std::uint32_t>(in, path);
    const auto realized = take<std::uint32_t>(in, path);
    if (realized != 0) set.realized_k = realized;
    const auto count = take<std::uint32_t>(in, path);
    set.values.resize(count);
    in.read(reinterpret_cast<char*>(set.values.data()),
            static_cast<std::streamsize>(count * sizeof(std::uint64_t)));
    if (!in) throw io_error("truncated raw dump: " + path.string());
    sets.push_back(std::move(set));
  }
  return sets;
}

void write_raw_csv(const std::filesystem::path& path,
                   std::span<const SetResult> sets) {
  std::ofstream out = open_out(path);
  out << "set_index,value\n";
  for (const SetResult& set : sets) {
    const std::string prefix = detail::fmt_u64(set.set_index) + ",";
    for (std::uint64_t value : set.values)
      out << prefix << detail::fmt_u64(value) << '\n';
  }
  if (!out) throw io_error("write failed for " + path.string());
}

}  // namespace layersum
