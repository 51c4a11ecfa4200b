#pragma once

#include <cstdint>

namespace layersum {

/// One-pass, mergeable accumulator of count and central moment sums up to
/// order 4 (Welford / Pébay recurrences; Pébay, SAND2008-6212). merge() is
/// associative and commutative up to floating-point roundoff, which makes
/// per-set accumulators safe to combine from worker threads in any fixed order.
class Moments {
 public:
  void add(double x) noexcept;
  void merge(const Moments& b) noexcept;

  std::uint64_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }
  double m2() const noexcept { return m2_; }
  double m3() const noexcept { return m3_; }
  double m4() const noexcept { return m4_; }

  double variance_population() const noexcept;
  double variance_sample() const noexcept;  // n-1 denominator
  double std_dev_sample() const noexcept;

  /// Population skewness g1 = sqrt(n) * M3 / M2^1.5. NaN when n == 0 or M2 == 0.
  double skewness() const noexcept;

  /// Population excess kurtosis g2 = n * M4 / M2^2 - 3. NaN when undefined.
  double excess_kurtosis() const noexcept;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double m3_ = 0.0;
  double m4_ = 0.0;
};

inline Moments moments_merge(Moments a, const Moments& b) noexcept {
  a.merge(b);
  return a;
}

}  // namespace layersum
