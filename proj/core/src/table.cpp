#include "layersum/table.hpp"

#include <cmath>
#include <cstdio>

#include "layersum/layers.hpp"
#include "layersum/oracles.hpp"
#include "layersum/summary.hpp"
#include "text_util.hpp"

namespace layersum {

namespace {

MetricsRow make_row(int layer, const char* round, const RunConfig& cfg,
                    std::uint32_t set_index) {
  const SetResult set = generate_set(cfg, set_index);
  const SetAnalysis analysis = analyze_set(set, cfg);
  const SetSummary& s = analysis.summary;

  TheoreticalMoments oracle;
  if (cfg.layer == LayerKind::layer3)
    oracle = mixture_moments(cfg.total_additions, cfg.max_number);
  else
    oracle = sum_moments(*set.realized_k, cfg.max_number);

  const double n = static_cast<double>(cfg.total_numbers);
  MetricsRow row;
  row.layer = layer;
  row.round = round;
  row.set_index = set_index;
  row.summands = cfg.layer == LayerKind::layer3 ? 0 : *set.realized_k;
  row.mean = s.mean;
  row.pct_mean = s.pct_mean;
  row.median = s.median;
  row.pct_median = s.pct_median;
  row.std_dev = s.std_dev;
  row.pct_std = s.pct_std;
  row.oracle_mean = oracle.mean;
  row.oracle_std = oracle.std_dev();
  row.mean_band = 5.0 * oracle.std_dev() / std::sqrt(n);
  row.std_band = 5.0 * oracle.std_dev() *
                 std::sqrt((2.0 + oracle.excess_kurtosis) / (4.0 * n));
  return row;
}

}  // namespace

std::vector<MetricsRow> metrics_table(const RunConfig& base) {
  validate(base);
  const auto last = static_cast<std::uint32_t>(base.total_sets);

  std::vector<MetricsRow> rows;
  for (int layer = 1; layer <= 3; ++layer) {
    RunConfig cfg = base;
    cfg.layer = layer == 1   ? LayerKind::layer1
                : layer == 2 ? LayerKind::layer2
                             : LayerKind::layer3;
    rows.push_back(make_row(layer, "first", cfg, 1));
    rows.push_back(make_row(layer, "last", cfg, last));
  }
  return rows;
}

std::string metrics_table_csv(const std::vector<MetricsRow>& rows) {
  using detail::fmt_double;
  using detail::fmt_u64;
  std::string out =
      "layer,round,set_index,summands,mean,pct_mean,median,pct_median,std_dev,"
      "pct_std,oracle_mean,oracle_std,mean_band,std_band\n";
  for (const MetricsRow& r : rows) {
    out += std::to_string(r.layer);
    out += ',';
    out += r.round;
    out += ',';
    out += fmt_u64(r.set_index);
    out += ',';
    out += fmt_u64(r.summands);
    for (double v : {r.mean, r.pct_mean, r.median, r.pct_median, r.std_dev,
                     r.pct_std, r.oracle_mean, r.oracle_std, r.mean_band,
                     r.std_band}) {
      out += ',';
      out += fmt_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string metrics_table_text(const std::vector<MetricsRow>& rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-6s %-6s %10s %12s %8s %12s %8s %14s %14s\n",
                "layer", "round", "summands", "mean", "%mean", "std_dev", "%std",
                "oracle_mean", "oracle_std");
  out += line;
  for (const MetricsRow& r : rows) {
    std::snprintf(line, sizeof(line),
                  "%-6d %-6s %10llu %12.1f %8.2f %12.1f %8.2f %14.1f %14.1f\n",
                  r.layer, r.round.c_str(),
                  static_cast<unsigned long long>(r.summands), r.mean, r.pct_mean,
                  r.std_dev, r.pct_std, r.oracle_mean, r.oracle_std);
    out += line;
  }
  return out;
}

}  // namespace layersum
