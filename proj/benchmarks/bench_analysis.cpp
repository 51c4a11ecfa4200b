#include <benchmark/benchmark.h>

#include <vector>

#include "layersum/moments.hpp"
#include "layersum/normality.hpp"
#include "layersum/rng.hpp"
#include "layersum/summary.hpp"

using namespace layersum;

namespace {

std::vector<double> sample(std::size_t n) {
  RandomStream stream = make_stream(MasterSeed{11}, 2);
  std::vector<double> values(n);
  for (double& v : values)
    v = static_cast<double>(stream.next_int(1, 1'000'000));
  return values;
}

}  // namespace

static void BM_MomentsAdd(benchmark::State& state) {
  const std::vector<double> values = sample(10'000);
  for (auto _ : state) {
    Moments m;
    for (double v : values) m.add(v);
    benchmark::DoNotOptimize(m.m4());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(values.size()));
}
BENCHMARK(BM_MomentsAdd);

static void BM_ShapiroWilk1000(benchmark::State& state) {
  const std::vector<double> values = sample(1000);
  for (auto _ : state) {
    const TestResult sw = shapiro_wilk(values);
    benchmark::DoNotOptimize(sw.p);
  }
}
BENCHMARK(BM_ShapiroWilk1000)->Unit(benchmark::kMicrosecond);

static void BM_KsNormal1000(benchmark::State& state) {
  const std::vector<double> values = sample(1000);
  for (auto _ : state) {
    const TestResult ks = ks_normal(values, 500000.0, 288675.0);
    benchmark::DoNotOptimize(ks.p);
  }
}
BENCHMARK(BM_KsNormal1000)->Unit(benchmark::kMicrosecond);

static void BM_AnalyzeSet(benchmark::State& state) {
  RunConfig cfg;
  cfg.layer = LayerKind::fixed;
  cfg.fixed_k = 100;
  cfg.total_sets = 1;
  cfg.total_numbers = 1000;
  cfg.seed = MasterSeed{3};
  const SetResult set = generate_set(cfg, 1);
  for (auto _ : state) {
    const SetAnalysis analysis = analyze_set(set, cfg);
    benchmark::DoNotOptimize(analysis.summary.ks_p);
  }
}
BENCHMARK(BM_AnalyzeSet)->Unit(benchmark::kMicrosecond);
