#include "layersum/moments.hpp"

#include <cmath>
#include <limits>

namespace layersum {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

void Moments::add(double x) noexcept {
  const double n1 = static_cast<double>(n_);
  ++n_;
  const double n = static_cast<double>(n_);
  const double delta = x - mean_;
  const double delta_n = delta / n;
  const double delta_n2 = delta_n * delta_n;
  const double term1 = delta * delta_n * n1;
  m4_ += term1 * delta_n2 * (n * n - 3.0 * n + 3.0) + 6.0 * delta_n2 * m2_ -
         4.0 * delta_n * m3_;
  m3_ += term1 * delta_n * (n - 2.0) - 3.0 * delta_n * m2_;
  m2_ += term1;
  mean_ += delta_n;
}

void Moments::merge(const Moments& b) noexcept {
  if (b.n_ == 0) return;
  if (n_ == 0) {
    *this = b;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(b.n_);
  const double n = na + nb;
  const double delta = b.mean_ - mean_;
  const double delta2 = delta * delta;
  const double delta3 = delta2 * delta;
  const double delta4 = delta2 * delta2;

  const double m4 = m4_ + b.m4_ +
                    delta4 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                    6.0 * delta2 * (na * na * b.m2_ + nb * nb * m2_) / (n * n) +
                    4.0 * delta * (na * b.m3_ - nb * m3_) / n;
  const double m3 = m3_ + b.m3_ + delta3 * na * nb * (na - nb) / (n * n) +
                    3.0 * delta * (na * b.m2_ - nb * m2_) / n;
  const double m2 = m2_ + b.m2_ + delta2 * na * nb / n;

  mean_ += delta * nb / n;
  m2_ = m2;
  m3_ = m3;
  m4_ = m4;
  n_ += b.n_;
}

double Moments::variance_population() const noexcept {
  return n_ == 0 ? kNan : m2_ / static_cast<double>(n_);
}

double Moments::variance_sample() const noexcept {
  return n_ < 2 ? kNan : m2_ / static_cast<double>(n_ - 1);
}

double Moments::std_dev_sample() const noexcept {
  const double v = variance_sample();
  return std::isnan(v) ? kNan : std::sqrt(v);
}

double Moments::skewness() const noexcept {
  if (n_ == 0 || m2_ <= 0.0) return kNan;
  const double n = static_cast<double>(n_);
  return std::sqrt(n) * m3_ / std::pow(m2_, 1.5);
}

double Moments::excess_kurtosis() const noexcept {
  if (n_ == 0 || m2_ <= 0.0) return kNan;
  const double n = static_cast<double>(n_);
  return n * m4_ / (m2_ * m2_) - 3.0;
}

}  // namespace layersum
