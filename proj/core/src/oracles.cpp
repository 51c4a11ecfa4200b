#include "layersum/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace layersum {

double TheoreticalMoments::std_dev() const noexcept { return std::sqrt(variance); }

TheoreticalMoments uniform_moments(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("uniform_moments: m must be >= 2");
  const double md = static_cast<double>(m);
  const double m2 = md * md;
  return {
      (md + 1.0) / 2.0,
      (m2 - 1.0) / 12.0,
      0.0,
      -6.0 * (m2 + 1.0) / (5.0 * (m2 - 1.0)),
  };
}

TheoreticalMoments sum_moments(std::uint64_t k, std::uint64_t m) {
  if (k < 1) throw std::invalid_argument("sum_moments: k must be >= 1");
  const TheoreticalMoments base = uniform_moments(m);
  const double kd = static_cast<double>(k);
  return {
      kd * base.mean,
      kd * base.variance,
      0.0,
      base.excess_kurtosis / kd,
  };
}

// Mixture-moment derivation. Write a = E[X], b = Var[X], d = kappa4[X] for a
// single draw X ~ Uniform{1..m}; X is symmetric so kappa3[X] = 0 and
// d = -(m^4 - 1)/120. Cumulants add over the k-fold sum S_k, so
//   kappa1 = k a, kappa2 = k b, kappa3 = 0, kappa4 = k d,
// and the raw moments of S_k follow from the cumulant-to-moment relations:
//   E[S_k]   = k a
//   E[S_k^2] = k b          + k^2 a^2
//   E[S_k^3] =       3 k^2 a b        + k^3 a^3
//   E[S_k^4] = k d + 3 k^2 b^2 + 6 k^3 a^2 b + k^4 a^4.
// Each is a polynomial in k, so averaging over K ~ Uniform{1..T} only needs
// the Faulhaber power sums P_r = sum_{k=1..T} k^r. Raw moments of the mixture
// V = S_K are then converted back to central moments the usual way.
TheoreticalMoments mixture_moments(std::uint64_t t, std::uint64_t m) {
  if (t < 1) throw std::invalid_argument("mixture_moments: T must be >= 1");
  const TheoreticalMoments base = uniform_moments(m);
  const double a = base.mean;
  const double b = base.variance;
  const double md = static_cast<double>(m);
  const double d = -(md * md * md * md - 1.0) / 120.0;

  const double td = static_cast<double>(t);
  const double p1 = td * (td + 1.0) / 2.0;
  const double p2 = td * (td + 1.0) * (2.0 * td + 1.0) / 6.0;
  const double p3 = p1 * p1;
  const double p4 =
      td * (td + 1.0) * (2.0 * td + 1.0) * (3.0 * td * td + 3.0 * td - 1.0) / 30.0;

  const double r1 = a * p1 / td;
  const double r2 = (b * p1 + a * a * p2) / td;
  const double r3 = (3.0 * a * b * p2 + a * a * a * p3) / td;
  const double r4 =
      (d * p1 + 3.0 * b * b * p2 + 6.0 * a * a * b * p3 + a * a * a * a * p4) / td;

  const double mean = r1;
  const double variance = r2 - mean * mean;
  const double m3 = r3 - 3.0 * mean * r2 + 2.0 * mean * mean * mean;
  const double m4 = r4 - 4.0 * mean * r3 + 6.0 * mean * mean * r2 -
                    3.0 * mean * mean * mean * mean;

  TheoreticalMoments out;
  out.mean = mean;
  out.variance = variance;
  out.skewness = variance > 0.0 ? m3 / std::pow(variance, 1.5) : 0.0;
  out.excess_kurtosis = variance > 0.0 ? m4 / (variance * variance) - 3.0 : 0.0;
  return out;
}

namespace {

void check_support(std::uint64_t cells, std::uint64_t budget) {
  if (cells > budget)
    throw std::invalid_argument("pmf support exceeds the cell budget");
}

void renormalize(std::vector<double>& probs) {
  double total = 0.0;
  for (double p : probs) total += p;
  if (total > 0.0)
    for (double& p : probs) p /= total;
}

// One convolution step with the Uniform{1..m} kernel: given the PMF of S_k on
// k(m-1)+1 cells starting at k, produce the PMF of S_{k+1}.
std::vector<double> convolve_uniform_step(const std::vector<double>& probs,
                                          std::uint64_t m) {
  const std::size_t out_len = probs.size() + static_cast<std::size_t>(m) - 1;
  std::vector<double> out(out_len, 0.0);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double contribution = probs[i] * inv_m;
    for (std::uint64_t draw = 0; draw < m; ++draw) out[i + draw] += contribution;
  }
  return out;
}

}  // namespace

Pmf exact_sum_pmf(std::uint64_t k, std::uint64_t m, std::uint64_t support_budget) {
  if (k < 1) throw std::invalid_argument("exact_sum_pmf: k must be >= 1");
  if (m < 2) throw std::invalid_argument("exact_sum_pmf: m must be >= 2");
  check_support(k * m, support_budget);

  Pmf pmf;
  pmf.offset = static_cast<std::int64_t>(k);
  pmf.probs.assign(m, 1.0 / static_cast<double>(m));
  for (std::uint64_t step = 1; step < k; ++step) {
    pmf.probs = convolve_uniform_step(pmf.probs, m);
    renormalize(pmf.probs);
  }
  return pmf;
}

Pmf mixture_pmf(std::uint64_t t, std::uint64_t m, std::uint64_t support_budget) {
  if (t < 1) throw std::invalid_argument("mixture_pmf: T must be >= 1");
  if (m < 2) throw std::invalid_argument("mixture_pmf: m must be >= 2");
  check_support(t * m, support_budget);

  Pmf mix;
  mix.offset = 1;
  mix.probs.assign(t * m, 0.0);

  // Reuse the k-step PMF to reach k+1: one running convolution, O(T^2 m).
  const double weight = 1.0 / static_cast<double>(t);
  std::vector<double> current(m, 1.0 / static_cast<double>(m));  // PMF of S_1
  for (std::uint64_t k = 1; k <= t; ++k) {
    for (std::size_t i = 0; i < current.size(); ++i)
      mix.probs[(k - 1) + i] += weight * current[i];  // S_k starts at value k
    if (k < t) {
      current = convolve_uniform_step(current, m);
      renormalize(current);
    }
  }
  return mix;
}

TheoreticalMoments pmf_moments(const Pmf& pmf) {
  if (pmf.probs.empty()) throw std::invalid_argument("pmf_moments: empty PMF");

  double mean = 0.0;
  for (std::size_t i = 0; i < pmf.probs.size(); ++i)
    mean += pmf.probs[i] * (static_cast<double>(pmf.offset) + static_cast<double>(i));

  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (std::size_t i = 0; i < pmf.probs.size(); ++i) {
    const double dev =
        static_cast<double>(pmf.offset) + static_cast<double>(i) - mean;
    const double dev2 = dev * dev;
    m2 += pmf.probs[i] * dev2;
    m3 += pmf.probs[i] * dev2 * dev;
    m4 += pmf.probs[i] * dev2 * dev2;
  }

  TheoreticalMoments out;
  out.mean = mean;
  out.variance = m2;
  out.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
  out.excess_kurtosis = m2 > 0.0 ? m4 / (m2 * m2) - 3.0 : 0.0;
  return out;
}

}  // namespace layersum
