#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "hlpp/fredholm.hpp"
#include "hlpp/quadrature.hpp"
#include "hlpp/specfun.hpp"

using namespace hlpp;
using cplx = std::complex<double>;
using std::numbers::pi;

namespace {

const cplx kTwoPiI(0.0, 2.0 * pi);

// contour integral of f over the rule, undoing the 1/(2 pi i) normalization
template <typename F>
cplx contour_integral(const ContourRule& rule, F f) {
  cplx acc = 0.0;
  for (size_t j = 0; j < rule.z.size(); ++j) acc += rule.w[j] * f(rule.z[j]);
  return acc * kTwoPiI;
}

// cofactor expansion, an O(n!) oracle for lu_det on tiny matrices
cplx det_cofactor(const std::vector<cplx>& a, int n) {
  if (n == 1) return a[0];
  cplx acc = 0.0;
  double sign = 1.0;
  for (int c = 0; c < n; ++c) {
    std::vector<cplx> minor;
    minor.reserve((n - 1) * (n - 1));
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (j != c) minor.push_back(a[i * n + j]);
    acc += sign * a[c] * det_cofactor(minor, n - 1);
    sign = -sign;
  }
  return acc;
}

}  // namespace

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  // n nodes are exact through degree 2n-1
  QuadRule g = gauss_legendre(5);
  REQUIRE(g.x.size() == 5);
  for (int d = 0; d <= 9; ++d) {
    double acc = 0.0;
    for (size_t i = 0; i < g.x.size(); ++i) acc += g.w[i] * std::pow(g.x[i], d);
    double exact = (d % 2 == 0) ? 2.0 / (d + 1) : 0.0;
    CHECK(std::abs(acc - exact) < 1e-14);
  }

  // symmetry of nodes and positivity of weights
  for (size_t i = 0; i < g.x.size(); ++i) {
    CHECK(g.w[i] > 0.0);
    CHECK(std::abs(g.x[i] + g.x[g.x.size() - 1 - i]) < 1e-14);
  }

  QuadRule h = gauss_legendre(20, 0.0, pi);
  double s = 0.0, wsum = 0.0;
  for (size_t i = 0; i < h.x.size(); ++i) {
    s += h.w[i] * std::sin(h.x[i]);
    wsum += h.w[i];
  }
  CHECK(std::abs(s - 2.0) < 1e-14);
  CHECK(std::abs(wsum - pi) < 1e-13);
}

TEST_CASE("circle rule reproduces residues and Cauchy integrals") {
  ContourRule c = circle(0.0, 1.0, 32);
  // only z^{-1} has a residue
  for (int k = -3; k <= 2; ++k) {
    cplx acc = 0.0;
    for (size_t j = 0; j < c.z.size(); ++j) acc += c.w[j] * std::pow(c.z[j], k);
    CHECK(std::abs(acc - (k == -1 ? 1.0 : 0.0)) < 1e-14);
  }

  // Cauchy integral formula, pole inside
  cplx a(0.3, 0.2);
  cplx got = 0.0;
  for (size_t j = 0; j < c.z.size(); ++j) got += c.w[j] * std::exp(c.z[j]) / (c.z[j] - a);
  CHECK(std::abs(got - std::exp(a)) < 1e-13);

  // pole outside integrates to zero; trapezoid error decays like |b|^{-m},
  // so the node count sets the accuracy here
  ContourRule cf = circle(0.0, 1.0, 64);
  cplx b(1.7, 0.4);
  got = 0.0;
  for (size_t j = 0; j < cf.z.size(); ++j) got += cf.w[j] * std::exp(cf.z[j]) / (cf.z[j] - b);
  CHECK(std::abs(got) < 1e-13);

  // off-center circle
  ContourRule c2 = circle(cplx(2.0, -1.0), 0.5, 24);
  got = 0.0;
  for (size_t j = 0; j < c2.z.size(); ++j) got += c2.w[j] / (c2.z[j] - cplx(2.1, -1.1));
  CHECK(std::abs(got - 1.0) < 1e-12);
}

TEST_CASE("segment and polyline rules match antiderivatives") {
  ContourRule s = segment(cplx(-1.0, 0.0), cplx(1.0, 0.0), 16, 2);
  CHECK(std::abs(contour_integral(s, [](cplx z) { return z * z; }) - cplx(2.0 / 3.0)) <
        1e-14);

  ContourRule d = segment(cplx(1.0, 0.0), cplx(0.0, 1.0), 16, 3);
  cplx got = contour_integral(d, [](cplx z) { return 1.0 / z; });
  CHECK(std::abs(got - cplx(0.0, pi / 2)) < 1e-13);

  ContourRule p =
      polyline({cplx(1.0, 0.0), cplx(1.0, 1.0), cplx(-1.0, 1.0)}, 12, 2);
  got = contour_integral(p, [](cplx z) { return std::exp(z); });
  CHECK(std::abs(got - (std::exp(cplx(-1.0, 1.0)) - std::exp(cplx(1.0, 0.0)))) < 1e-13);
}

TEST_CASE("q-pochhammer degenerate cases and direct product") {
  CHECK(std::abs(q_pochhammer(cplx(0.35, 0.0), 0.0) - cplx(0.65)) < 1e-15);
  CHECK(std::abs(q_pochhammer(cplx(0.0, 0.0), 0.8) - cplx(1.0)) < 1e-15);

  auto direct = [](cplx z, double q, int terms) {
    cplx prod = 1.0;
    double qj = 1.0;
    for (int j = 0; j < terms; ++j, qj *= q) prod *= (1.0 - z * qj);
    return prod;
  };
  CHECK(std::abs(q_pochhammer(cplx(0.5, 0.0), 0.5) - direct(0.5, 0.5, 200)) < 1e-14);
  cplx zc(0.3, 0.4);
  CHECK(std::abs(q_pochhammer(zc, 0.7) - direct(zc, 0.7, 400)) < 1e-13);
}

TEST_CASE("q-pochhammer at z=q recovers the Euler function") {
  // pentagonal number theorem: (q;q)_inf = sum_k (-1)^k q^{k(3k-1)/2}
  double q = 0.3;
  double penta = 0.0;
  for (int k = -12; k <= 12; ++k)
    penta += ((k % 2 == 0) ? 1.0 : -1.0) * std::pow(q, k * (3 * k - 1) / 2);
  CHECK(std::abs(q_pochhammer(cplx(q, 0.0), q) - cplx(penta)) < 1e-14);
}

TEST_CASE("airy function matches high-precision reference values") {
  // reference values computed with 30-digit arbitrary-precision arithmetic;
  // the grid brackets both representation switch points
  struct Ref {
    double x, ai;
  };
  const Ref table[] = {
      {0.0000, 0.355028053887817239260},
      {0.0010, 0.354769234543174206489},
      {-0.0010, 0.355286873232417135468},
      {0.5000, 0.231693606480833489769},
      {1.0000, 0.135292416312881415524},
      {-1.0000, 0.535560883292352118800},
      {2.0000, 0.0349241304232743791353},
      {-2.0000, 0.227407428201685575992},
      {3.5000, 0.00258409878698963496328},
      {-3.5000, -0.375533823140431911934},
      {5.0000, 0.000108344428136074417350},
      {-5.0000, 0.350761009024114319788},
      {6.4000, 0.00000361776231885179969288},
      {6.6000, 0.00000215659995259692198210},
      {7.0000, 7.49212886399716708077e-7},
      {-8.4000, -0.319592189726198065144},
      {-8.6000, -0.313112452617262573578},
      {10.0000, 1.10475325528986859336e-10},
      {-10.0000, 0.0402412384864431906894},
      {12.0000, 1.39318468887536083905e-13},
      {-12.0000, -0.0665551750543731294742},
      {15.0000, 2.16496252073799229899e-18},
      {-20.0000, -0.176406127077984689590},
  };
  for (const Ref& ref : table) {
    double got = airy_ai(ref.x);
    double tol = 1e-12 * std::max(1.0, std::abs(ref.ai));
    CHECK_MESSAGE(std::abs(got - ref.ai) < tol, "x = ", ref.x, " got ", got);
  }

  // closed form at the origin
  CHECK(std::abs(airy_ai(0.0) - std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0)) <
        1e-15);

  // strictly decreasing positive right tail
  for (double x = 1.0; x < 15.0; x += 0.5) {
    CHECK(airy_ai(x) > 0.0);
    CHECK(airy_ai(x + 0.5) < airy_ai(x));
  }
}

TEST_CASE("s_ar is odd and matches its product form") {
  double a = 0.5, r = 0.6;
  const cplx grid[] = {cplx(0.1, 0.0), cplx(0.0, 1.3), cplx(0.2, -0.7),
                       cplx(-0.3, 2.0), cplx(0.05, 3.1)};
  for (cplx z : grid) {
    cplx sp = s_ar(z, a, r), sm = s_ar(-z, a, r);
    CHECK(std::abs(sp + sm) < 1e-13);

    cplx prod = 1.0;
    double arj = a;
    for (int j = 0; j < 600 && arj > 1e-19; ++j, arj *= r)
      prod *= (1.0 + arj * std::exp(z)) / (1.0 + arj * std::exp(-z));
    CHECK(std::abs(std::exp(sp) - prod) < 1e-12 * std::abs(prod));
  }
  CHECK(std::abs(s_ar(cplx(0.0, 0.0), a, r)) == 0.0);

  // outside the strip a e^{|Re z|} >= 1 the series diverges and must throw
  CHECK_THROWS_AS((void)s_ar(cplx(0.8, 0.0), 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS((void)s_ar(cplx(-0.8, 0.1), 0.5, 0.5), std::invalid_argument);
}

TEST_CASE("s_ar Taylor expansion matches series coefficients") {
  double a = 0.4, r = 0.6;
  double c1 = s_ar_coefficient(0, a, r);
  double c3 = s_ar_coefficient(1, a, r);
  double c5 = s_ar_coefficient(2, a, r);

  const cplx grid[] = {cplx(1e-3, 0.0), cplx(0.0, 1e-3), cplx(7e-4, -7e-4)};
  for (cplx z : grid) {
    cplx s = s_ar(z, a, r);
    CHECK(std::abs(s - c1 * z - c3 * z * z * z) < 10.0 * std::pow(std::abs(z), 5) / (1 - r));
    // the c5 term removes everything above rounding noise of the log1p sum
    CHECK(std::abs(s - c1 * z - c3 * z * z * z - c5 * std::pow(z, 5)) < 5e-15);
  }

  // direct summation oracle for c1 and the m_shift alias
  double direct = 0.0;
  for (int k = 1; k <= 200; ++k)
    direct += 2.0 * ((k % 2 == 1) ? 1.0 : -1.0) * std::pow(0.5, k) / (1.0 - std::pow(0.5, k));
  CHECK(std::abs(s_ar_coefficient(0, 0.5, 0.5) - direct) < 1e-13);
  CHECK(m_shift(0.5, 0.5) == s_ar_coefficient(0, 0.5, 0.5));
}

TEST_CASE("scaled series coefficients approach their r->1 limits") {
  double a = 0.5;
  double lim1 = 2.0 * std::log1p(a);
  double lim3 = a / (3.0 * (1.0 + a) * (1.0 + a));
  double prev1 = 1e9, prev3 = 1e9;
  for (double r : {0.9, 0.99, 0.999}) {
    double err1 = std::abs((1.0 - r) * s_ar_coefficient(0, a, r) - lim1);
    double err3 = std::abs((1.0 - r) * s_ar_coefficient(1, a, r) - lim3);
    CHECK(err1 < 0.4 * prev1);
    CHECK(err3 < 0.4 * prev3);
    prev1 = err1;
    prev3 = err3;
  }
  CHECK(prev1 < 2e-3);
  CHECK(prev3 < 2e-4);
}

TEST_CASE("lu determinant agrees with cofactor expansion") {
  std::vector<cplx> m2 = {1.0, 2.0, 3.0, 4.0};
  CHECK(std::abs(lu_det(m2, 2) - cplx(-2.0)) < 1e-14);

  std::vector<cplx> sing = {1.0, 2.0, 2.0, 4.0};
  CHECK(std::abs(lu_det(sing, 2)) < 1e-14);

  // a fixed complex 4x4 against the O(n!) oracle
  std::vector<cplx> m4 = {
      cplx(1.0, 0.5),  cplx(-0.3, 0.1), cplx(0.2, 0.0),  cplx(0.7, -0.2),
      cplx(0.0, 1.1),  cplx(2.0, -0.4), cplx(-0.5, 0.3), cplx(0.1, 0.1),
      cplx(0.6, 0.0),  cplx(0.4, 0.9),  cplx(1.5, 0.2),  cplx(-0.8, 0.0),
      cplx(-0.2, 0.3), cplx(0.0, -0.6), cplx(0.9, 0.4),  cplx(1.2, -1.0)};
  cplx want = det_cofactor(m4, 4);
  std::vector<cplx> work = m4;
  CHECK(std::abs(lu_det(work, 4) - want) < 1e-12 * std::abs(want));
}

TEST_CASE("fredholm determinant basics on the unit circle") {
  ContourRule rule = circle(0.0, 1.0, 64);

  CHECK(std::abs(fredholm_det([](cplx, cplx) { return cplx(0.0); }, rule) - 1.0) <
        1e-15);

  // rank one: (K f)(z) = phi(z) (1/2pi i) contour-int psi f; det(I+cK) = 1 + c tr
  CKernel rank1 = [](cplx z, cplx w) { return std::exp(z) * 0.4 / w; };
  cplx tr = 0.4;  // (1/2pi i) int e^z 0.4/z dz = 0.4 e^0
  CHECK(std::abs(fredholm_det(rank1, rule) - (1.0 + tr)) < 1e-12);
  CHECK(std::abs(fredholm_det(rank1, rule, -1.0) - (1.0 - tr)) < 1e-12);
}

TEST_CASE("fredholm determinant agrees with the n<=3 series expansion") {
  ContourRule rule = circle(0.0, 1.0, 48);
  CKernel k = [](cplx z, cplx w) { return 0.05 / (z * w - 4.0) + 0.02 * z / (w - 3.0); };

  // Hadamard bound on the discarded n>=4 terms: |e_n| <= n^{n/2} B^n / n!
  double sup = 0.0;
  for (cplx z : rule.z)
    for (cplx w : rule.z) sup = std::max(sup, std::abs(k(z, w)));
  double bnorm = sup;  // contour length 2pi, measure dz/(2pi i) has mass ~1
  double remainder = 0.0;
  for (int n = 4; n <= 12; ++n) {
    double term = std::pow(n, n / 2.0) * std::pow(bnorm, n) / std::tgamma(n + 1.0);
    remainder += term;
  }
  REQUIRE(remainder < 1e-6);

  cplx direct = fredholm_det(k, rule);
  cplx series = fredholm_series3(k, rule);
  CHECK(std::abs(direct - series) < remainder + 1e-10);

  // resolution doubling leaves the value fixed for this analytic kernel
  cplx finer = fredholm_det(k, circle(0.0, 1.0, 96));
  CHECK(std::abs(direct - finer) < 1e-12);
}
