#include <benchmark/benchmark.h>

#include "layersum/layers.hpp"

using namespace layersum;

static void BM_SumOfUniforms(benchmark::State& state) {
  RandomStream stream = make_stream(MasterSeed{7}, 3);
  const auto k = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t sink = 0;
  for (auto _ : state) sink += sum_of_uniforms(stream, k, 100);
  benchmark::DoNotOptimize(sink);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SumOfUniforms)->Arg(10)->Arg(100)->Arg(10000);

static void BM_Layer1Set(benchmark::State& state) {
  RunConfig cfg;
  cfg.layer = LayerKind::layer1;
  cfg.total_sets = 200;
  cfg.total_numbers = 1000;
  cfg.total_additions = 10000;
  cfg.seed = MasterSeed{5};
  const auto set_index = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    SetResult set = generate_layer1_set(cfg, set_index);
    benchmark::DoNotOptimize(set.values.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(
                              cfg.total_numbers * layer1_summands(set_index, cfg)));
}
BENCHMARK(BM_Layer1Set)->Arg(1)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_Layer3Set(benchmark::State& state) {
  RunConfig cfg;
  cfg.layer = LayerKind::layer3;
  cfg.total_sets = 1;
  cfg.total_numbers = static_cast<std::uint64_t>(state.range(0));
  cfg.total_additions = 10000;
  cfg.seed = MasterSeed{5};
  for (auto _ : state) {
    SetResult set = generate_layer3_set(cfg, 1);
    benchmark::DoNotOptimize(set.values.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Layer3Set)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
