#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "layersum/descriptive.hpp"
#include "layersum/layers.hpp"
#include "layersum/oracles.hpp"

using namespace layersum;

namespace {

RunConfig small_config(LayerKind layer) {
  RunConfig cfg;
  cfg.layer = layer;
  cfg.max_number = 100;
  cfg.total_numbers = 50;
  cfg.total_sets = 20;
  cfg.total_additions = 30;
  cfg.seed = MasterSeed{123};
  return cfg;
}

// Two-sample KS distance between empirical CDFs. Both pointers advance past
// every copy of the current support point before the gap is measured, which
// keeps ties (heavy here: only m distinct values) from inflating D.
double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    double x;
    if (i < a.size() && j < b.size())
      x = std::min(a[i], b[j]);
    else
      x = i < a.size() ? a[i] : b[j];
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    const double fa = static_cast<double>(i) / a.size();
    const double fb = static_cast<double>(j) / b.size();
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

}  // namespace

TEST_SUITE("layers") {

TEST_CASE("layer1_summands follows the ceil schedule") {
  RunConfig cfg;
  cfg.total_sets = 10000;
  cfg.total_additions = 10000;
  CHECK(layer1_summands(1, cfg) == 1);
  CHECK(layer1_summands(9999, cfg) == 9999);
  CHECK(layer1_summands(10000, cfg) == 10000);

  cfg.total_sets = 10;
  CHECK(layer1_summands(5, cfg) == 5000);
  CHECK(layer1_summands(10, cfg) == 10000);

  cfg.total_sets = 3;
  cfg.total_additions = 10;
  CHECK(layer1_summands(1, cfg) == 4);   // ceil(10/3)
  CHECK(layer1_summands(2, cfg) == 7);   // ceil(20/3)
  CHECK(layer1_summands(3, cfg) == 10);

  // Nondecreasing, ends at T.
  cfg.total_sets = 77;
  cfg.total_additions = 1000;
  std::uint64_t prev = 0;
  for (std::uint64_t s = 1; s <= 77; ++s) {
    const std::uint64_t k = layer1_summands(s, cfg);
    CHECK(k >= prev);
    prev = k;
  }
  CHECK(prev == 1000);
}

TEST_CASE("sum_of_uniforms: k=2, m=2 matches the enumerated law") {
  // Brute-force oracle: the 4 equally likely pairs give {2:1/4, 3:1/2, 4:1/4}.
  RandomStream stream = make_stream(MasterSeed{5}, 9);
  std::map<std::uint64_t, int> counts;
  const int reps = 100'000;
  for (int i = 0; i < reps; ++i) ++counts[sum_of_uniforms(stream, 2, 2)];
  REQUIRE(counts.size() == 3);
  CHECK(static_cast<double>(counts[2]) / reps == doctest::Approx(0.25).epsilon(0.03));
  CHECK(static_cast<double>(counts[3]) / reps == doctest::Approx(0.50).epsilon(0.03));
  CHECK(static_cast<double>(counts[4]) / reps == doctest::Approx(0.25).epsilon(0.03));
}

TEST_CASE("sum_of_uniforms: single-draw mean near 50.5") {
  RandomStream stream = make_stream(MasterSeed{6}, 2);
  double sum = 0.0;
  const int reps = 100'000;
  for (int i = 0; i < reps; ++i)
    sum += static_cast<double>(sum_of_uniforms(stream, 1, 100));
  CHECK(sum / reps == doctest::Approx(50.5).epsilon(0.008));  // +-0.4
}

TEST_CASE("every generated value sits in [k, k*m]") {
  for (LayerKind layer : {LayerKind::fixed, LayerKind::layer1, LayerKind::layer2,
                          LayerKind::layer3}) {
    RunConfig cfg = small_config(layer);
    cfg.fixed_k = 4;
    for (std::uint32_t s = 1; s <= cfg.total_sets; ++s) {
      const SetResult set = generate_set(cfg, s);
      for (std::size_t j = 0; j < set.values.size(); ++j) {
        const std::uint64_t k =
            set.per_value_k ? (*set.per_value_k)[j] : *set.realized_k;
        REQUIRE(set.values[j] >= k);
        REQUIRE(set.values[j] <= k * cfg.max_number);
      }
    }
  }
}

TEST_CASE("layer bounds: layer2 K in [1, T]; layer3 per-value K in [1, T]") {
  RunConfig cfg = small_config(LayerKind::layer2);
  for (std::uint32_t s = 1; s <= cfg.total_sets; ++s) {
    const SetResult set = generate_layer2_set(cfg, s);
    REQUIRE(set.realized_k.has_value());
    CHECK(*set.realized_k >= 1);
    CHECK(*set.realized_k <= cfg.total_additions);
    CHECK_FALSE(set.per_value_k.has_value());
  }
  cfg.layer = LayerKind::layer3;
  for (std::uint32_t s = 1; s <= cfg.total_sets; ++s) {
    const SetResult set = generate_layer3_set(cfg, s);
    REQUIRE(set.per_value_k.has_value());
    CHECK_FALSE(set.realized_k.has_value());
    for (std::uint32_t k : *set.per_value_k) {
      CHECK(k >= 1);
      CHECK(k <= cfg.total_additions);
    }
  }
}

TEST_CASE("draw-count accounting per layer") {
  // layer1/fixed: n*k. layer2: 1 + n*K. layer3: n + sum K_j.
  RunConfig cfg = small_config(LayerKind::layer1);
  cfg.total_sets = 4;
  cfg.total_additions = 4;
  cfg.total_numbers = 3;

  std::uint64_t total = 0;
  for (std::uint32_t s = 1; s <= 4; ++s) {
    const SetResult set = generate_layer1_set(cfg, s);
    CHECK(set.draws == cfg.total_numbers * layer1_summands(s, cfg));
    total += set.draws;
  }
  CHECK(total == 3 * (1 + 2 + 3 + 4));

  cfg.layer = LayerKind::layer2;
  for (std::uint32_t s = 1; s <= 4; ++s) {
    const SetResult set = generate_layer2_set(cfg, s);
    CHECK(set.draws == 1 + cfg.total_numbers * *set.realized_k);
  }

  cfg.layer = LayerKind::layer3;
  for (std::uint32_t s = 1; s <= 4; ++s) {
    const SetResult set = generate_layer3_set(cfg, s);
    std::uint64_t k_sum = 0;
    for (std::uint32_t k : *set.per_value_k) k_sum += k;
    CHECK(set.draws == cfg.total_numbers + k_sum);
  }

  cfg.layer = LayerKind::fixed;
  cfg.fixed_k = 3;
  const SetResult set = generate_fixed_set(cfg, 2);
  CHECK(set.draws == cfg.total_numbers * 3);
}

TEST_CASE("degenerate T=1: all three layers collapse to the raw uniform law") {
  RunConfig cfg;
  cfg.max_number = 100;
  cfg.total_numbers = 100'000;
  cfg.total_sets = 1;
  cfg.total_additions = 1;
  cfg.seed = MasterSeed{77};

  cfg.layer = LayerKind::layer1;
  const SetResult base = generate_layer1_set(cfg, 1);
  std::vector<double> base_values(base.values.begin(), base.values.end());

  for (LayerKind layer : {LayerKind::layer2, LayerKind::layer3}) {
    RunConfig other = cfg;
    other.layer = layer;
    other.seed = MasterSeed{78};  // independent sample of the same law
    const SetResult set = generate_set(other, 1);
    std::vector<double> values(set.values.begin(), set.values.end());
    CHECK(ks_two_sample(base_values, values) < 0.01);
  }
}

TEST_CASE("layer1 moment law over a summand-count sweep") {
  // Sample mean within 5 SE of k*(m+1)/2, sample variance near k*(m^2-1)/12.
  RunConfig cfg;
  cfg.layer = LayerKind::layer1;
  cfg.total_numbers = 1000;
  cfg.total_sets = 16;
  cfg.total_additions = 1600;
  cfg.seed = MasterSeed{20240101};
  for (std::uint32_t s = 1; s <= cfg.total_sets; ++s) {
    const SetResult set = generate_layer1_set(cfg, s);
    const std::uint64_t k = *set.realized_k;
    const TheoreticalMoments oracle = sum_moments(k, cfg.max_number);
    double mean = 0.0;
    for (std::uint64_t v : set.values) mean += static_cast<double>(v);
    mean /= static_cast<double>(set.values.size());
    const double se = oracle.std_dev() / std::sqrt(1000.0);
    CHECK(std::abs(mean - oracle.mean) < 5.0 * se);
  }
}

TEST_CASE("layer2 realized_k is uniform on {1..T}") {
  RunConfig cfg;
  cfg.layer = LayerKind::layer2;
  cfg.total_numbers = 1;  // keep generation cheap; only the K draw matters
  cfg.total_sets = 10000;
  cfg.total_additions = 10000;
  cfg.seed = MasterSeed{99};
  double mean_k = 0.0;
  for (std::uint32_t s = 1; s <= cfg.total_sets; ++s)
    mean_k += static_cast<double>(*generate_layer2_set(cfg, s).realized_k);
  mean_k /= static_cast<double>(cfg.total_sets);
  // SE = sqrt((T^2-1)/12)/sqrt(S) ~ 28.9
  CHECK(std::abs(mean_k - 5000.5) < 120.0);
}

TEST_CASE("layer3 pooled distribution matches the analytic mixture") {
  // T=2, m=2 mixture: {1:0.25, 2:0.375, 3:0.25, 4:0.125}.
  RunConfig cfg;
  cfg.layer = LayerKind::layer3;
  cfg.max_number = 2;
  cfg.total_numbers = 100'000;
  cfg.total_sets = 1;
  cfg.total_additions = 2;
  cfg.seed = MasterSeed{31337};
  const SetResult set = generate_layer3_set(cfg, 1);
  std::map<std::uint64_t, double> freq;
  for (std::uint64_t v : set.values) freq[v] += 1.0 / cfg.total_numbers;
  CHECK(freq[1] == doctest::Approx(0.25).epsilon(0.05));
  CHECK(freq[2] == doctest::Approx(0.375).epsilon(0.05));
  CHECK(freq[3] == doctest::Approx(0.25).epsilon(0.05));
  CHECK(freq[4] == doctest::Approx(0.125).epsilon(0.05));

  // Tiny-parameter grid against mixture_pmf, 4 binomial SE per outcome.
  RunConfig grid = cfg;
  grid.max_number = 4;
  grid.total_additions = 8;
  grid.total_numbers = 1'000'000;
  grid.seed = MasterSeed{424242};
  const SetResult big = generate_layer3_set(grid, 1);
  const Pmf mix = mixture_pmf(8, 4);
  std::vector<double> counts(mix.probs.size(), 0.0);
  for (std::uint64_t v : big.values)
    counts[v - static_cast<std::uint64_t>(mix.offset)] += 1.0;
  const double n = static_cast<double>(grid.total_numbers);
  for (std::size_t i = 0; i < mix.probs.size(); ++i) {
    const double expected = n * mix.probs[i];
    const double se = std::sqrt(n * mix.probs[i] * (1.0 - mix.probs[i]));
    CHECK(std::abs(counts[i] - expected) <= 4.0 * se);
  }
}

TEST_CASE("layer1 first set at full scale: single draws, mean near 51%") {
  RunConfig cfg;
  cfg.layer = LayerKind::layer1;
  cfg.total_sets = 10000;
  cfg.total_additions = 10000;
  cfg.total_numbers = 1000;
  cfg.max_number = 100;
  cfg.seed = MasterSeed{2};
  const SetResult set = generate_layer1_set(cfg, 1);
  CHECK(*set.realized_k == 1);
  double mean = 0;
  for (std::uint64_t v : set.values) {
    CHECK(v >= 1);
    CHECK(v <= 100);
    mean += static_cast<double>(v);
  }
  mean /= 1000.0;
  CHECK(std::abs(mean - 50.5) < 5.0 * 28.866 / std::sqrt(1000.0));  // 5 SE
}

TEST_CASE("fixed k=2 values peak at 101 in an integer-aligned histogram") {
  RunConfig cfg;
  cfg.layer = LayerKind::fixed;
  cfg.fixed_k = 2;
  cfg.max_number = 100;
  cfg.total_numbers = 1'000'000;
  cfg.total_sets = 1;
  cfg.seed = MasterSeed{8};
  const SetResult set = generate_fixed_set(cfg, 1);
  std::vector<double> values(set.values.begin(), set.values.end());
  const Histogram h = histogram(values, 199);  // one bin per lattice point
  std::size_t peak = 0;
  for (std::size_t b = 1; b < h.counts.size(); ++b)
    if (h.counts[b] > h.counts[peak]) peak = b;
  // Bin b covers value 2 + b on the [2, 200] lattice.
  CHECK(peak + 2 == 101);
}

TEST_CASE("fixed k=1 histogram over integer bins is near flat") {
  // 1e6 single draws into one bin per outcome: every count within 5 binomial
  // SE of 1e4, and the max/min bin ratio stays small (1.04 at this seed; the
  // expected range of 100 such bins puts the ratio right around 1.05).
  RunConfig cfg;
  cfg.layer = LayerKind::fixed;
  cfg.fixed_k = 1;
  cfg.max_number = 100;
  cfg.total_numbers = 1'000'000;
  cfg.total_sets = 1;
  cfg.seed = MasterSeed{1};
  const SetResult set = generate_fixed_set(cfg, 1);
  std::vector<double> values(set.values.begin(), set.values.end());
  const Histogram h = histogram(values, 100);
  REQUIRE(h.counts.size() == 100);
  const double se = std::sqrt(1e6 * 0.01 * 0.99);
  std::uint64_t lo = h.counts[0], hi = h.counts[0];
  for (std::uint64_t c : h.counts) {
    CHECK(std::abs(static_cast<double>(c) - 1e4) < 5.0 * se);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  CHECK(static_cast<double>(hi) / static_cast<double>(lo) < 1.05);
}

TEST_CASE("set_index preconditions") {
  RunConfig cfg = small_config(LayerKind::layer1);
  CHECK_THROWS_AS(generate_layer1_set(cfg, 0), std::invalid_argument);
  CHECK_THROWS_AS(
      generate_layer1_set(cfg, static_cast<std::uint32_t>(cfg.total_sets + 1)),
      std::invalid_argument);
}

}  // TEST_SUITE
