#pragma once

#include <cstdint>
#include <vector>

namespace layersum {

/// Closed-form moments used as ground truth against the simulator.
struct TheoreticalMoments {
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;

  double std_dev() const noexcept;
};

/// Exact discrete distribution on consecutive integers starting at `offset`.
struct Pmf {
  std::int64_t offset = 0;
  std::vector<double> probs;
};

/// Moments of a single draw from Uniform{1..m}:
/// mean (m+1)/2, variance (m^2-1)/12, skewness 0,
/// excess kurtosis -6(m^2+1) / (5(m^2-1)). Requires m >= 2.
TheoreticalMoments uniform_moments(std::uint64_t m);

/// Moments of the sum of k iid Uniform{1..m} draws, by cumulant additivity:
/// mean and variance scale with k, excess kurtosis decays as 1/k.
TheoreticalMoments sum_moments(std::uint64_t k, std::uint64_t m);

/// Moments of the per-value-random-count law: V = S_K with K ~ Uniform{1..T}
/// independent of the draws. Mean and variance follow the laws of total
/// expectation and total variance; skewness and excess kurtosis come from the
/// raw-moment composition E[V^r] = E_K[E[S_K^r]] (derivation in oracles.cpp).
TheoreticalMoments mixture_moments(std::uint64_t t, std::uint64_t m);

/// Exact PMF of the sum of k iid Uniform{1..m} draws by iterative convolution;
/// offset k, length k(m-1)+1, symmetric about k(m+1)/2. Throws if the support
/// k*m would exceed `support_budget` cells.
Pmf exact_sum_pmf(std::uint64_t k, std::uint64_t m,
                  std::uint64_t support_budget = 10'000'000);

/// Equal-weight mixture (1/T) * sum_k exact_sum_pmf(k, m) on the common
/// support [1, T*m], computed with one running convolution.
Pmf mixture_pmf(std::uint64_t t, std::uint64_t m,
                std::uint64_t support_budget = 10'000'000);

/// Exact moments of a Pmf by direct summation over its support.
TheoreticalMoments pmf_moments(const Pmf& pmf);

}  // namespace layersum
