#include "layersum/normality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace layersum {

double normal_cdf(double z) noexcept {
  return 0.5 * std::erfc(-z * std::numbers::sqrt2_v<double> / 2.0);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("normal_quantile: p must be in (0, 1)");

  // Acklam (2003) rational approximation.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  // One Halley refinement against the exact CDF.
  const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi_v<double>);
  const double e = normal_cdf(x) - p;
  const double u = e * sqrt_2pi * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

double kolmogorov_tail(double t) noexcept {
  if (t <= 0.0) return 1.0;
  if (t < 1.18) {
    // Theta-function inversion of the CDF: K(t) = sqrt(2*pi)/t * sum over odd
    // j of exp(-j^2 pi^2 / (8 t^2)); three terms suffice below 1.18.
    const double v = std::numbers::pi_v<double> * std::numbers::pi_v<double> /
                     (8.0 * t * t);
    const double w = std::sqrt(2.0 * std::numbers::pi_v<double>) / t;
    const double cdf =
        w * (std::exp(-v) + std::exp(-9.0 * v) + std::exp(-25.0 * v));
    return 1.0 - cdf;
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 20; ++j) {
    const double term = std::exp(-2.0 * j * j * t * t);
    sum += sign * term;
    if (term < 1e-17) break;
    sign = -sign;
  }
  const double q = 2.0 * sum;
  return std::clamp(q, 0.0, 1.0);
}

TestResult jarque_bera(double skewness, double excess_kurtosis, std::uint64_t n) {
  if (n < 8) throw std::invalid_argument("jarque_bera: n must be >= 8");
  const double nn = static_cast<double>(n);
  const double stat =
      nn / 6.0 * (skewness * skewness + excess_kurtosis * excess_kurtosis / 4.0);
  return {stat, std::exp(-stat / 2.0)};
}

TestResult ks_normal(std::span<const double> values, double mu, double sigma) {
  if (values.size() < 8)
    throw std::invalid_argument("ks_normal: need at least 8 values");
  if (!(sigma > 0.0))
    throw std::invalid_argument("ks_normal: sigma must be positive");

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());

  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = normal_cdf((sorted[i] - mu) / sigma);
    const double upper = (static_cast<double>(i) + 1.0) / n - f;
    const double lower = f - static_cast<double>(i) / n;
    d = std::max({d, upper, lower});
  }
  return {d, kolmogorov_tail(std::sqrt(n) * d)};
}

namespace {

double poly(const double* coef, int order, double x) {
  double value = coef[0];
  double power = x;
  for (int i = 1; i < order; ++i) {
    value += coef[i] * power;
    power *= x;
  }
  return value;
}

}  // namespace

TestResult shapiro_wilk(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 3 || n > 5000)
    throw std::invalid_argument("shapiro_wilk: n must be in [3, 5000]");

  std::vector<double> x(values.begin(), values.end());
  std::sort(x.begin(), x.end());
  if (x.back() - x.front() <= 0.0)
    throw std::invalid_argument("shapiro_wilk: zero sample range");

  // Royston's polynomial corrections (AS R94).
  static constexpr double c1[6] = {0.0,      0.221157,  -0.147981,
                                   -2.071190, 4.434685, -2.706056};
  static constexpr double c2[6] = {0.0,      0.042981,  -0.293762,
                                   -1.752461, 5.682633, -3.582633};
  static constexpr double c3[4] = {0.544, -0.39978, 0.025054, -6.714e-4};
  static constexpr double c4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
  static constexpr double c5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
  static constexpr double c6[3] = {-0.4803, -0.082676, 0.0030302};
  static constexpr double g[2] = {-2.273, 0.459};

  const double an = static_cast<double>(n);
  const std::size_t n2 = n / 2;
  std::vector<double> a(n2);

  if (n == 3) {
    a[0] = std::numbers::sqrt2_v<double> / 2.0;
  } else {
    // Expected normal order statistics, Blom approximation (i - 3/8)/(n + 1/4),
    // then Royston's renormalization of the first one or two weights.
    const double an25 = an + 0.25;
    double summ2 = 0.0;
    for (std::size_t i = 0; i < n2; ++i) {
      a[i] = normal_quantile((static_cast<double>(i) + 1.0 - 0.375) / an25);
      summ2 += a[i] * a[i];
    }
    summ2 *= 2.0;
    const double ssumm2 = std::sqrt(summ2);
    const double rsn = 1.0 / std::sqrt(an);
    const double a1 = poly(c1, 6, rsn) - a[0] / ssumm2;

    std::size_t i1;
    double fac;
    if (n > 5) {
      i1 = 2;
      const double a2 = -a[1] / ssumm2 + poly(c2, 6, rsn);
      fac = std::sqrt((summ2 - 2.0 * a[0] * a[0] - 2.0 * a[1] * a[1]) /
                      (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
      a[0] = a1;
      a[1] = a2;
    } else {
      i1 = 1;
      fac = std::sqrt((summ2 - 2.0 * a[0] * a[0]) / (1.0 - 2.0 * a1 * a1));
      a[0] = a1;
    }
    for (std::size_t i = i1; i < n2; ++i) a[i] = -a[i] / fac;
  }

  // W is the squared correlation between the ordered data and the full
  // antisymmetric weight vector (-a[n2-1..0] ... a[0..n2-1]), whose mean is 0.
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= an;
  double ssx = 0.0;
  for (double v : x) ssx += (v - mean) * (v - mean);
  double sax = 0.0;
  double ssa = 0.0;
  for (std::size_t i = 0; i < n2; ++i) {
    sax += a[i] * (x[n - 1 - i] - x[i]);
    ssa += 2.0 * a[i] * a[i];
  }

  // 1 - W in factored form to avoid cancellation for W near 1.
  const double ssassx = std::sqrt(ssa * ssx);
  const double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
  double w = 1.0 - w1;
  if (w >= 1.0) return {1.0, 1.0};

  if (n == 3) {
    constexpr double pi6 = 1.90985931710274;   // 6/pi
    constexpr double stqr = 1.04719755119660;  // asin(sqrt(3/4))
    const double p = pi6 * (std::asin(std::sqrt(w)) - stqr);
    return {w, std::clamp(p, 0.0, 1.0)};
  }

  double m, s, y;
  if (n <= 11) {
    const double gamma = poly(g, 2, an);
    y = std::log(w1);
    if (y >= gamma) return {w, 1e-19};
    y = -std::log(gamma - y);
    m = poly(c3, 4, an);
    s = std::exp(poly(c4, 4, an));
  } else {
    const double logn = std::log(an);
    y = std::log(w1);
    m = poly(c5, 4, logn);
    s = std::exp(poly(c6, 3, logn));
  }
  const double z = (y - m) / s;
  return {w, 1.0 - normal_cdf(z)};
}

}  // namespace layersum
