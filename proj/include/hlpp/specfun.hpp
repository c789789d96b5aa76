#pragma once

#include <complex>

namespace hlpp {

// (z; q)_infinity = prod_{j>=0} (1 - z q^j), needs 0 <= q < 1
std::complex<double> q_pochhammer(std::complex<double> z, double q);

// S(z) = sum_{j>=0} [log(1 + a r^j e^z) - log(1 + a r^j e^{-z})], the action
// whose saddle at 0 drives all the steepest-descent contours here.  Odd in
// z, analytic on the strip a e^{|Re z|} < 1; arguments outside throw.
std::complex<double> s_ar(std::complex<double> z, double a, double r);

// odd Taylor coefficients of S at the origin,
//   c_{2l+1} = 2/(2l+1)! * sum_{k>=1} (-1)^{k+1} k^{2l} a^k / (1 - r^k)
double s_ar_coefficient(int l, double a, double r);

// c_1, the drift recentering the largest column: 2 sum (-1)^{k+1} a^k/(1-r^k)
double m_shift(double a, double r);

// Airy function on the real line; Maclaurin series in long double around the
// origin, optimally truncated asymptotics beyond |x| ~ 7-8, error < ~1e-14
double airy_ai(double x);

}  // namespace hlpp
