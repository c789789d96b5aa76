#pragma once

#include <functional>
#include <vector>

namespace hlpp {

// macroscopic profile of the column lengths: slice floor(tau N) of a sample
// at rate r has about N * limit_shape(tau) parts
double limit_shape(double tau);
double limit_shape_d1(double tau);  // one-sided at tau = 0, from the right
double limit_shape_d2(double tau);

// cube-root fluctuation coefficient chi; the recentered column length
// divided by N^{1/3}/chi converges to the GUE Tracy-Widom law
double chi_factor(double tau);

// trilogarithm on (-1, 1), plain series
double li3(double x);

// mean total volume under the measure with weight r^{|pi|} A_pi(t), and its
// (1-r)^3-rescaled limit 2 zeta(3) - 2 Li3(t)
double volume_mean(double r, double t);
double volume_limit(double t);

// Kolmogorov-Smirnov distance between an empirical sample and a cdf
double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf);

// scaling data for observing slice floor(tau N) of a sample at rates (r, t).
// center is the exact first-order series m_shift(a, r); the limit-shape
// centering 2 N log(1 + e^{-|tau|/2}) differs from it by O(1).
struct ScalingFrame {
  double r, t, tau;
  double N;       // 1/(1-r)
  long long k;    // floor(tau N), the slice observed
  double a;       // r^{(1+|k|)/2}
  double a1;      // e^{-|tau|/2}, the r -> 1 limit of a
  double center;  // m_shift(a, r)
  double chi;     // chi_factor(tau)
  double scale;   // N^{1/3}/chi
  double kappa;   // (-log t) N^{1/3}
  double T;       // crossover time 2 (kappa/chi)^3

  ScalingFrame(double r, double t, double tau);

  // (length - center)/scale, the Tracy-Widom statistic
  double gue_statistic(double length) const;
  // (-log t)(length - center) - log(1-t), the crossover statistic
  double crossover_statistic(double length) const;
};

}  // namespace hlpp
