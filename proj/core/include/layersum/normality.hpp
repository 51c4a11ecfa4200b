#pragma once

#include <cstdint>
#include <span>

namespace layersum {

struct TestResult {
  double stat = 0.0;
  double p = 1.0;
};

/// Standard normal CDF, Phi(z).
double normal_cdf(double z) noexcept;

/// Inverse standard normal CDF for p in (0, 1). Acklam's rational
/// approximation polished with one Halley step; ~1e-15 absolute error.
double normal_quantile(double p);

/// Upper tail P(K > t) of the asymptotic Kolmogorov distribution,
/// Q(t) = 2 * sum_{j>=1} (-1)^{j-1} exp(-2 j^2 t^2), with the Jacobi theta
/// inversion used below t = 1.18 for fast convergence (Marsaglia, Tsang &
/// Wang 2003 splitting).
double kolmogorov_tail(double t) noexcept;

/// Jarque-Bera normality statistic (n/6) * (g1^2 + g2^2/4) with its
/// chi-square(2) upper-tail p-value exp(-stat/2). Requires n >= 8.
TestResult jarque_bera(double skewness, double excess_kurtosis, std::uint64_t n);

/// One-sample Kolmogorov-Smirnov distance of `values` against
/// Normal(mu, sigma), both one-sided gaps evaluated at every sample point.
/// The p-value uses the asymptotic distribution at sqrt(n) * D.
///
/// When mu and sigma were estimated from the same sample this p-value is
/// anti-conservative (the Lilliefors caveat); reports carry a flag for it.
/// Requires length >= 8 and sigma > 0.
TestResult ks_normal(std::span<const double> values, double mu, double sigma);

/// Shapiro-Wilk W test, Royston's AS R94 approximation (Applied Statistics
/// 44(4), 1995), uncensored samples, valid for 3 <= n <= 5000.
/// Throws std::invalid_argument outside that range or on zero sample range.
TestResult shapiro_wilk(std::span<const double> values);

}  // namespace layersum
