#include <benchmark/benchmark.h>

#include "layersum/rng.hpp"

using namespace layersum;

static void BM_NextU64(benchmark::State& state) {
  RandomStream stream = make_stream(MasterSeed{1}, 1);
  std::uint64_t sink = 0;
  for (auto _ : state) sink ^= stream.next_u64();
  benchmark::DoNotOptimize(sink);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NextU64);

static void BM_NextInt100(benchmark::State& state) {
  RandomStream stream = make_stream(MasterSeed{1}, 1);
  std::int64_t sink = 0;
  for (auto _ : state) sink += stream.next_int(1, 100);
  benchmark::DoNotOptimize(sink);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NextInt100);

// Aggregate draw rate across threads; each thread owns its own stream.
static void BM_NextInt100Threaded(benchmark::State& state) {
  RandomStream stream =
      make_stream(MasterSeed{1}, static_cast<std::uint64_t>(state.thread_index()));
  std::int64_t sink = 0;
  for (auto _ : state) sink += stream.next_int(1, 100);
  benchmark::DoNotOptimize(sink);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NextInt100Threaded)->Threads(2)->Threads(4)->Threads(8);

static void BM_MakeStream(benchmark::State& state) {
  std::uint64_t id = 0;
  std::uint64_t sink = 0;
  for (auto _ : state) {
    RandomStream stream = make_stream(MasterSeed{42}, id++);
    sink ^= stream.next_u64();
  }
  benchmark::DoNotOptimize(sink);
}
BENCHMARK(BM_MakeStream);
