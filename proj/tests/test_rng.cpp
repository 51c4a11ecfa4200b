#include <doctest.h>

#include <cmath>
#include <vector>

#include "layersum/rng.hpp"

using namespace layersum;

TEST_SUITE("rng") {

TEST_CASE("identical (seed, id) reproduces the same sequence") {
  RandomStream a = make_stream(MasterSeed{42}, 0);
  RandomStream b = make_stream(MasterSeed{42}, 0);
  for (int i = 0; i < 1'000'000; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct stream ids diverge") {
  RandomStream a = make_stream(MasterSeed{42}, 0);
  RandomStream b = make_stream(MasterSeed{42}, 1);
  bool differs = false;
  for (int i = 0; i < 1'000'000 && !differs; ++i)
    differs = a.next_u64() != b.next_u64();
  CHECK(differs);
}

TEST_CASE("distinct seeds diverge") {
  RandomStream a = make_stream(MasterSeed{42}, 7);
  RandomStream b = make_stream(MasterSeed{43}, 7);
  bool differs = false;
  for (int i = 0; i < 1'000'000 && !differs; ++i)
    differs = a.next_u64() != b.next_u64();
  CHECK(differs);
}

TEST_CASE("interleaving draw patterns does not break determinism") {
  RandomStream a = make_stream(MasterSeed{9}, 3);
  RandomStream b = make_stream(MasterSeed{9}, 3);
  std::vector<std::int64_t> from_a, from_b;
  for (int i = 0; i < 1000; ++i) {
    from_a.push_back(a.next_int(1, 100));
    from_a.push_back(a.next_int(1, 6));
  }
  for (int i = 0; i < 2000; ++i)
    from_b.push_back(b.next_int(1, i % 2 == 0 ? 100 : 6));
  CHECK(from_a == from_b);
}

TEST_CASE("singleton range returns its only value") {
  RandomStream s = make_stream(MasterSeed{1}, 1);
  for (int i = 0; i < 100; ++i) CHECK(s.next_int(5, 5) == 5);
}

TEST_CASE("lo > hi is rejected") {
  RandomStream s = make_stream(MasterSeed{1}, 1);
  CHECK_THROWS_AS(s.next_int(3, 2), std::invalid_argument);
}

TEST_CASE("draw_count counts bounded draws") {
  RandomStream s = make_stream(MasterSeed{1}, 1);
  for (int i = 0; i < 57; ++i) s.next_int(1, 100);
  CHECK(s.draw_count() == 57);
}

TEST_CASE("uniformity on {1..100}: per-outcome frequencies and sample mean") {
  RandomStream s = make_stream(MasterSeed{2024}, 5);
  const int draws = 1'000'000;
  std::vector<std::uint64_t> counts(100, 0);
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) {
    const std::int64_t v = s.next_int(1, 100);
    REQUIRE(v >= 1);
    REQUIRE(v <= 100);
    ++counts[static_cast<std::size_t>(v - 1)];
    sum += static_cast<double>(v);
  }

  for (std::uint64_t c : counts) {
    const double freq = static_cast<double>(c) / draws;
    CHECK(freq > 0.009);
    CHECK(freq < 0.011);
  }
  // E = 50.5, SE = 28.866/sqrt(1e6) ~ 0.0289
  CHECK(sum / draws == doctest::Approx(50.5).epsilon(0.002));
}

TEST_CASE("chi-square goodness of fit over 1e7 draws") {
  RandomStream s = make_stream(MasterSeed{2024}, 6);
  const std::int64_t draws = 10'000'000;
  std::vector<std::uint64_t> counts(100, 0);
  for (std::int64_t i = 0; i < draws; ++i)
    ++counts[static_cast<std::size_t>(s.next_int(1, 100) - 1)];

  double chi2 = 0.0;
  const double expected = static_cast<double>(draws) / 100.0;
  for (std::uint64_t c : counts) {
    const double dev = static_cast<double>(c) - expected;
    chi2 += dev * dev / expected;
  }
  // Critical value of chi-square(99) at alpha = 1e-6 (Wilson-Hilferty), ~181.
  CHECK(chi2 < 181.0);
}

TEST_CASE("no modulo bias: max deviation within 6 binomial SE at 1e7 draws") {
  // 100 does not divide 2^64, so a biased reducer would skew low outcomes.
  RandomStream s = make_stream(MasterSeed{7}, 11);
  const std::int64_t draws = 10'000'000;
  std::vector<std::int64_t> counts(100, 0);
  for (std::int64_t i = 0; i < draws; ++i) ++counts[s.next_int(1, 100) - 1];

  const double p = 0.01;
  const double se = std::sqrt(draws * p * (1.0 - p));
  const double expected = draws * p;
  double worst = 0.0;
  for (std::int64_t c : counts)
    worst = std::max(worst, std::abs(static_cast<double>(c) - expected));
  CHECK(worst < 6.0 * se);
}

TEST_CASE("negative bounds stay in range") {
  RandomStream s = make_stream(MasterSeed{3}, 2);
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t v = s.next_int(-5, 5);
    CHECK(v >= -5);
    CHECK(v <= 5);
  }
}

}  // TEST_SUITE
