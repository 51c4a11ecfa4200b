#include "layersum/export_csv.hpp"

#include <charconv>

#include "layersum/config.hpp"
#include "text_util.hpp"

namespace layersum {

using detail::fmt_double;
using detail::fmt_u64;

SetSelection parse_selection(const std::string& text) {
  SetSelection sel;
  if (text == "pooled") {
    sel.mode = SetSelection::Mode::pooled;
  } else if (text == "all") {
    sel.mode = SetSelection::Mode::all;
  } else if (text == "twelve") {
    sel.mode = SetSelection::Mode::twelve;
  } else {
    sel.mode = SetSelection::Mode::list;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      std::uint32_t value = 0;
      const auto result =
          std::from_chars(text.data() + pos, text.data() + comma, value);
      if (result.ec != std::errc{} || result.ptr != text.data() + comma)
        throw config_error("select must be pooled|all|twelve or set indices, got '" +
                           text + "'");
      sel.indices.push_back(value);
      pos = comma + 1;
    }
    if (sel.indices.empty())
      throw config_error("select: empty set-index list");
  }
  return sel;
}

std::vector<std::uint32_t> resolve_selection(const SetSelection& selection,
                                             std::uint32_t total_sets) {
  switch (selection.mode) {
    case SetSelection::Mode::pooled:
      return {};
    case SetSelection::Mode::all: {
      std::vector<std::uint32_t> all(total_sets);
      for (std::uint32_t i = 0; i < total_sets; ++i) all[i] = i + 1;
      return all;
    }
    case SetSelection::Mode::twelve: {
      if (total_sets <= 12) return resolve_selection({SetSelection::Mode::all, {}},
                                                     total_sets);
      std::vector<std::uint32_t> picks;
      for (int i = 0; i < 12; ++i) {
        const auto s = static_cast<std::uint32_t>(
            1 + (static_cast<std::uint64_t>(i) * (total_sets - 1) + 5) / 11);
        if (picks.empty() || picks.back() != s) picks.push_back(s);
      }
      return picks;
    }
    case SetSelection::Mode::list:
      for (std::uint32_t s : selection.indices)
        if (s < 1 || s > total_sets)
          throw config_error("select: set index " + std::to_string(s) +
                             " outside [1, " + std::to_string(total_sets) + "]");
      return selection.indices;
  }
  throw config_error("select: unknown mode");
}

std::string histogram_csv(
    std::span<const std::pair<std::uint32_t, Histogram>> series) {
  std::string out = "set_index,bin_lo,bin_hi,count\n";
  for (const auto& [set_index, hist] : series) {
    for (std::size_t b = 0; b < hist.counts.size(); ++b) {
      out += fmt_u64(set_index);
      out += ',';
      out += fmt_double(hist.bin_edges[b]);
      out += ',';
      out += fmt_double(hist.bin_edges[b + 1]);
      out += ',';
      out += fmt_u64(hist.counts[b]);
      out += '\n';
    }
  }
  return out;
}

std::string boxplot_csv(std::span<const SetSummary> summaries,
                        std::span<const std::uint32_t> indices) {
  std::string out = "set_index,min,q1,median,q3,max,outliers\n";
  for (std::uint32_t s : indices) {
    const SetSummary& row = summaries[s - 1];
    out += fmt_u64(row.set_index);
    for (double v : {row.min, row.q1, row.median, row.q3, row.max}) {
      out += ',';
      out += fmt_double(v);
    }
    out += ',';
    out += fmt_u64(row.outlier_count);
    out += '\n';
  }
  return out;
}

std::string stddev_percent_csv(std::span<const SetSummary> summaries) {
  std::string out = "set_index,pct_std\n";
  for (const SetSummary& row : summaries) {
    out += fmt_u64(row.set_index);
    out += ',';
    out += fmt_double(row.pct_std);
    out += '\n';
  }
  return out;
}

}  // namespace layersum
