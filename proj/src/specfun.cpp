#include "hlpp/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hlpp {

std::complex<double> q_pochhammer(std::complex<double> z, double q) {
  if (!(q >= 0.0 && q < 1.0)) throw std::invalid_argument("need 0 <= q < 1");
  std::complex<double> out = 1.0;
  double scale = std::abs(z);
  for (int j = 0; j < 100000; ++j) {
    out *= 1.0 - z;
    z *= q;
    if (scale * std::pow(q, j + 1) < 1e-18) break;
  }
  return out;
}

namespace {

// log(1 + w) staying accurate for small |w|
std::complex<double> log1p_c(std::complex<double> w) {
  if (std::abs(w) < 1e-4) {
    std::complex<double> w2 = w * w;
    return w - w2 / 2.0 + w2 * w / 3.0 - w2 * w2 / 4.0;
  }
  return std::log(1.0 + w);
}

}  // namespace

std::complex<double> s_ar(std::complex<double> z, double a, double r) {
  if (!(a > 0.0 && a < 1.0 && r >= 0.0 && r < 1.0))
    throw std::invalid_argument("need 0 < a < 1 and 0 <= r < 1");
  double grow = a * std::exp(std::abs(z.real()));
  if (!(grow < 1.0)) throw std::invalid_argument("z outside the strip a e^{|Re z|} < 1");
  std::complex<double> ep = std::exp(z), em = std::exp(-z);
  std::complex<double> acc = 0.0;
  double arj = a;
  while (arj * std::max(std::abs(ep), std::abs(em)) > 1e-18) {
    acc += log1p_c(arj * ep) - log1p_c(arj * em);
    arj *= r;
    if (r == 0.0) break;
  }
  return acc;
}

double s_ar_coefficient(int l, double a, double r) {
  if (l < 0) throw std::invalid_argument("need l >= 0");
  if (!(a > 0.0 && a < 1.0 && r >= 0.0 && r < 1.0))
    throw std::invalid_argument("need 0 < a < 1 and 0 <= r < 1");
  double sum = 0.0;
  double ak = 1.0;
  for (int k = 1; k < 100000; ++k) {
    ak *= a;
    double term = std::pow(static_cast<double>(k), 2 * l) * ak / (1.0 - std::pow(r, k));
    if (k % 2 == 0) term = -term;
    sum += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum)) && k > 4) break;
  }
  double fact = 1.0;
  for (int j = 2; j <= 2 * l + 1; ++j) fact *= j;
  return 2.0 * sum / fact;
}

double m_shift(double a, double r) { return s_ar_coefficient(0, a, r); }

namespace {

// Maclaurin branch: Ai(x) = Ai(0) f(x) + Ai'(0) g(x) with the two 3-step
// hypergeometric series; long double keeps the cancellation for x < 0 in
// check out to |x| ~ 8.5
double airy_maclaurin(double x) {
  // 3^{-2/3}/Gamma(2/3) and -3^{-1/3}/Gamma(1/3), spelled out so the hot
  // path does not pay for tgammal on every call
  const long double ai0 = 0.35502805388781723926006318600418317640L;
  const long double aip0 = -0.25881940379280679840518356018920396348L;
  long double x3 = static_cast<long double>(x) * x * x;
  long double f = 1.0L, g = static_cast<long double>(x);
  long double tf = 1.0L, tg = g;
  for (int k = 0; k < 200; ++k) {
    tf *= x3 / ((3 * k + 2) * (3 * k + 3));
    tg *= x3 / ((3 * k + 3) * (3 * k + 4));
    f += tf;
    g += tg;
    if (fabsl(tf) < 1e-22L * fabsl(f) && fabsl(tg) < 1e-22L * (fabsl(g) + 1e-30L)) break;
  }
  return static_cast<double>(ai0 * f + aip0 * g);
}

// u_k coefficients of the asymptotic series, u_0 = 1
long double airy_u(int k, long double prev) {
  return prev * (6.0L * k - 5.0L) * (6.0L * k - 3.0L) * (6.0L * k - 1.0L) /
         (216.0L * k * (2.0L * k - 1.0L));
}

double airy_asymptotic_pos(double x) {
  long double xi = 2.0L / 3.0L * powl(static_cast<long double>(x), 1.5L);
  long double sum = 1.0L, u = 1.0L, term = 1.0L, best = 1.0L, xik = 1.0L;
  for (int k = 1; k < 60; ++k) {
    u = airy_u(k, u);
    xik /= xi;
    long double next = u * xik;
    if (fabsl(next) >= fabsl(term)) break;  // optimal truncation
    term = next;
    sum += (k % 2 ? -1.0L : 1.0L) * next;
    best = sum;
  }
  long double pref = expl(-xi) / (2.0L * sqrtl(std::numbers::pi_v<long double>) *
                                  powl(static_cast<long double>(x), 0.25L));
  return static_cast<double>(pref * best);
}

double airy_asymptotic_neg(double x) {
  long double y = -static_cast<long double>(x);
  long double xi = 2.0L / 3.0L * powl(y, 1.5L);
  // split the series into even (cosine) and odd (sine) parts
  long double ucur = 1.0L;
  long double ceven = 1.0L, codd = 0.0L;
  long double last = 1.0L, xik = 1.0L;
  for (int k = 1; k < 60; ++k) {
    ucur = airy_u(k, ucur);
    xik /= xi;
    long double next = ucur * xik;
    if (fabsl(next) >= fabsl(last)) break;
    last = next;
    long double signed_term = ((k / 2) % 2 ? -1.0L : 1.0L) * next;
    if (k % 2 == 0)
      ceven += signed_term;
    else
      codd += signed_term;
  }
  long double phase = xi - std::numbers::pi_v<long double> / 4.0L;
  long double pref = 1.0L / (sqrtl(std::numbers::pi_v<long double>) * powl(y, 0.25L));
  return static_cast<double>(pref * (cosl(phase) * ceven + sinl(phase) * codd));
}

}  // namespace

double airy_ai(double x) {
  if (x >= 6.5) return airy_asymptotic_pos(x);
  if (x <= -8.5) return airy_asymptotic_neg(x);
  return airy_maclaurin(x);
}

}  // namespace hlpp
