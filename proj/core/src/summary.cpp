#include "layersum/summary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "layersum/descriptive.hpp"
#include "layersum/normality.hpp"

namespace layersum {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

PercentMetrics percent_metrics(const SetSummary& summary, const RunConfig& cfg) {
  double basis;
  if (cfg.layer == LayerKind::layer3) {
    basis = static_cast<double>(cfg.total_additions) *
            static_cast<double>(cfg.max_number);
  } else {
    basis = static_cast<double>(summary.realized_k.value_or(1)) *
            static_cast<double>(cfg.max_number);
  }
  return {
      100.0 * summary.mean / basis,
      100.0 * summary.median / basis,
      100.0 * summary.std_dev / basis,
  };
}

SetAnalysis analyze_set(const SetResult& set, const RunConfig& cfg) {
  const std::size_t n = set.values.size();

  std::vector<double> values(n);
  Moments moments;
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = static_cast<double>(set.values[i]);
    moments.add(values[i]);
  }
  std::sort(values.begin(), values.end());

  SetSummary s;
  s.set_index = set.set_index;
  s.realized_k = set.realized_k;
  s.count = n;
  s.mean = moments.mean();
  s.std_dev = moments.std_dev_sample();
  s.skewness = moments.skewness();
  s.excess_kurtosis = moments.excess_kurtosis();

  const BoxplotStats box = boxplot_stats_sorted(values);
  s.min = box.min;
  s.q1 = box.q1;
  s.median = box.median;
  s.q3 = box.q3;
  s.max = box.max;
  s.outlier_count = box.outlier_count;

  s.jb_stat = kNan;
  s.jb_p = kNan;
  if (n >= 8 && std::isfinite(s.skewness)) {
    const TestResult jb = jarque_bera(s.skewness, s.excess_kurtosis, n);
    s.jb_stat = jb.stat;
    s.jb_p = jb.p;
  }

  s.ks_d = kNan;
  s.ks_p = kNan;
  if (n >= 8 && s.std_dev > 0.0) {
    const TestResult ks = ks_normal(values, s.mean, s.std_dev);
    s.ks_d = ks.stat;
    s.ks_p = ks.p;
  }

  if (n >= 3 && n <= 5000 && values.back() > values.front()) {
    const TestResult sw = shapiro_wilk(values);
    s.sw_w = sw.stat;
    s.sw_p = sw.p;
  }

  const PercentMetrics pct = percent_metrics(s, cfg);
  s.pct_mean = pct.pct_mean;
  s.pct_median = pct.pct_median;
  s.pct_std = pct.pct_std;

  SetAnalysis out;
  out.summary = std::move(s);
  out.moments = moments;
  return out;
}

}  // namespace layersum
