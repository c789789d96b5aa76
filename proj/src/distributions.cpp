#include "hlpp/distributions.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "hlpp/fredholm.hpp"
#include "hlpp/quadrature.hpp"
#include "hlpp/specfun.hpp"

namespace hlpp {

namespace {

// composite Gauss-Legendre rule with panels of roughly the given width
QuadRule panelled_gl(double lo, double hi, double width, int nodes_per_panel) {
  int panels = std::max(1, (int)std::ceil((hi - lo) / width));
  QuadRule out;
  double step = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    QuadRule g = gauss_legendre(nodes_per_panel, lo + p * step, lo + (p + 1) * step);
    out.x.insert(out.x.end(), g.x.begin(), g.x.end());
    out.w.insert(out.w.end(), g.w.begin(), g.w.end());
  }
  return out;
}

// det(I - B diag(d) B^T) for a real n x m factor, via the complex LU already
// in the library; n stays small so the cast costs nothing
double det_factored(const std::vector<double>& b, const std::vector<double>& d, int n,
                    int m) {
  std::vector<std::complex<double>> a(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < m; ++k) acc += b[i * m + k] * d[k] * b[j * m + k];
      a[i * n + j] = (i == j ? 1.0 : 0.0) - acc;
    }
  return lu_det(a, n).real();
}

}  // namespace

double f_gue(double x, int order) {
  if (order < 8) throw std::invalid_argument("need at least 8 quadrature points");
  // the kernel is the product integral of two Airy factors over s > 0; both
  // grids reach far enough into the decaying tails that truncation sits far
  // below the discretization error
  QuadRule eta = gauss_legendre(order, x, std::max(x + 12.0, 9.0));
  QuadRule s = panelled_gl(0.0, std::max(20.0, 10.0 - x), 1.0, 10);
  int m = (int)s.x.size();

  std::vector<double> b(order * m), d(m);
  for (int k = 0; k < m; ++k) d[k] = s.w[k];
  for (int i = 0; i < order; ++i) {
    double we = std::sqrt(eta.w[i]);
    for (int k = 0; k < m; ++k) b[i * m + k] = we * airy_ai(eta.x[i] + s.x[k]);
  }
  return det_factored(b, d, order, m);
}

double f_cdrp(double x, double T, int order) {
  if (!(T > 0.0)) throw std::invalid_argument("need T > 0");
  if (order < 8) throw std::invalid_argument("need at least 8 quadrature points");
  const double sigma = std::cbrt(2.0 / T);

  QuadRule eta = gauss_legendre(order, 0.0, 16.0);
  // the Fermi factor varies on scale sigma and has poles pi*sigma off the
  // real axis, so panel width tracks sigma when T is large
  double lo = std::min(-8.0, sigma * (-x - 40.0));
  QuadRule s = panelled_gl(lo, 12.0, std::min(1.0, 3.0 * sigma), 10);
  int m = (int)s.x.size();

  std::vector<double> b(order * m), d(m);
  for (int k = 0; k < m; ++k) {
    // e^x / (e^x + e^{-s/sigma}), evaluated without overflow on either side
    double fermi = 1.0 / (1.0 + std::exp(-x - s.x[k] / sigma));
    d[k] = s.w[k] * fermi;
  }
  for (int i = 0; i < order; ++i) {
    double we = std::sqrt(eta.w[i]);
    for (int k = 0; k < m; ++k) b[i * m + k] = we * airy_ai(eta.x[i] + s.x[k]);
  }
  return det_factored(b, d, order, m);
}

}  // namespace hlpp
