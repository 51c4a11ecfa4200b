#include "layersum/run.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace layersum {

RunOutcome generate_run(const RunConfig& cfg, const SetSink& sink) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();

  const auto total = static_cast<std::uint32_t>(cfg.total_sets);
  std::vector<SetSummary> summaries(total);
  std::vector<Moments> per_set(total);
  std::vector<std::uint64_t> draws(total, 0);

  std::atomic<std::uint32_t> next{1};
  std::mutex sink_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        const std::uint32_t set_index = next.fetch_add(1, std::memory_order_relaxed);
        if (set_index > total) return;
        SetResult result = generate_set(cfg, set_index);
        SetAnalysis analysis = analyze_set(result, cfg);
        summaries[set_index - 1] = std::move(analysis.summary);
        per_set[set_index - 1] = analysis.moments;
        draws[set_index - 1] = result.draws;
        if (sink) {
          std::scoped_lock lock(sink_mutex);
          sink(result);
        }
      }
    } catch (...) {
      std::scoped_lock lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(total + 1, std::memory_order_relaxed);  // drain remaining work
    }
  };

  const unsigned thread_count =
      std::min<unsigned>(cfg.workers, total > 0 ? total : 1);
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (unsigned i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  RunOutcome out;
  out.summaries = std::move(summaries);
  for (std::uint32_t i = 0; i < total; ++i) {
    out.pooled.merge(per_set[i]);  // index order keeps the fold deterministic
    out.total_draws += draws[i];
  }
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

}  // namespace layersum
