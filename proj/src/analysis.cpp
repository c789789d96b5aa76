#include "hlpp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hlpp/specfun.hpp"

namespace hlpp {

double limit_shape(double tau) { return 2.0 * std::log1p(std::exp(-std::abs(tau) / 2.0)); }

double limit_shape_d1(double tau) {
  double e = std::exp(-std::abs(tau) / 2.0);
  double d = -e / (1.0 + e);
  return tau < 0.0 ? -d : d;
}

double limit_shape_d2(double tau) {
  double e = std::exp(-std::abs(tau) / 2.0);
  return 0.5 * e / ((1.0 + e) * (1.0 + e));
}

double chi_factor(double tau) {
  double a = std::exp(-std::abs(tau) / 2.0);
  return std::cbrt((1.0 + a) * (1.0 + a) / a);
}

double li3(double x) {
  if (!(x > -1.0 && x < 1.0)) throw std::invalid_argument("li3 needs |x| < 1");
  double sum = 0.0, xk = 1.0;
  for (long long k = 1; k < 4000000; ++k) {
    xk *= x;
    double term = xk / (double(k) * k * k);
    sum += term;
    if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum))) break;
  }
  return sum;
}

double volume_mean(double r, double t) {
  if (!(r > 0.0 && r < 1.0) || !(t >= 0.0 && t < 1.0))
    throw std::invalid_argument("need 0 < r < 1 and 0 <= t < 1");
  double sum = 0.0, rk = 1.0, tk = 1.0;
  for (long long k = 1; k < 10000000; ++k) {
    rk *= r;
    tk *= t;
    double d = 1.0 - rk;
    double term = (1.0 - tk) * rk * (1.0 + rk) / (d * d * d);
    sum += term;
    if (term < 1e-17 * (1.0 + sum)) break;
  }
  return sum;
}

double volume_limit(double t) {
  const double zeta3 = 1.2020569031595942854;
  return 2.0 * zeta3 - 2.0 * li3(t);
}

double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("empty sample");
  std::sort(sample.begin(), sample.end());
  double n = double(sample.size()), d = 0.0;
  for (size_t i = 0; i < sample.size(); ++i) {
    double f = cdf(sample[i]);
    d = std::max(d, std::max(std::abs(f - (i + 1) / n), std::abs(f - i / n)));
  }
  return d;
}

ScalingFrame::ScalingFrame(double r_, double t_, double tau_) : r(r_), t(t_), tau(tau_) {
  if (!(r > 0.0 && r < 1.0) || !(t >= 0.0 && t < 1.0))
    throw std::invalid_argument("need 0 < r < 1 and 0 <= t < 1");
  N = 1.0 / (1.0 - r);
  // the nudge keeps integer products exact: 1/(1-0.98) sits just below 50,
  // and floor(2 * N) would land on 99 rather than the intended 100
  k = (long long)std::floor(tau * N + 1e-9);
  a = std::pow(r, (1.0 + std::abs((double)k)) / 2.0);
  a1 = std::exp(-std::abs(tau) / 2.0);
  center = m_shift(a, r);
  chi = chi_factor(tau);
  scale = std::cbrt(N) / chi;
  kappa = -std::log(t) * std::cbrt(N);
  T = 2.0 * std::pow(kappa / chi, 3.0);
}

double ScalingFrame::gue_statistic(double length) const { return (length - center) / scale; }

double ScalingFrame::crossover_statistic(double length) const {
  return -std::log(t) * (length - center) - std::log(1.0 - t);
}

}  // namespace hlpp
