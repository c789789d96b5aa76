#include "hlpp/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hlpp {

QuadRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  QuadRule q;
  q.x.resize(n);
  q.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi-style initial guess, then Newton on P_n
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    q.x[i] = -x;
    q.x[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.w[i] = w;
    q.w[n - 1 - i] = w;
  }
  return q;
}

QuadRule gauss_legendre(int n, double a, double b) {
  QuadRule q = gauss_legendre(n);
  double mid = (a + b) / 2, half = (b - a) / 2;
  for (int i = 0; i < n; ++i) {
    q.x[i] = mid + half * q.x[i];
    q.w[i] *= half;
  }
  return q;
}

ContourRule circle(std::complex<double> center, double radius, int m) {
  if (m < 1) throw std::invalid_argument("need m >= 1");
  ContourRule c;
  c.z.resize(m);
  c.w.resize(m);
  for (int j = 0; j < m; ++j) {
    double th = 2.0 * std::numbers::pi * j / m;
    std::complex<double> e{std::cos(th), std::sin(th)};
    c.z[j] = center + radius * e;
    // dz/(2 pi i) = radius * e * dtheta / (2 pi), dtheta = 2 pi / m
    c.w[j] = radius * e / static_cast<double>(m);
  }
  return c;
}

ContourRule segment(std::complex<double> za, std::complex<double> zb, int n_per_panel,
                    int panels) {
  if (panels < 1) throw std::invalid_argument("need panels >= 1");
  ContourRule c;
  QuadRule g = gauss_legendre(n_per_panel);
  std::complex<double> d = (zb - za) / static_cast<double>(panels);
  const std::complex<double> itwopi{0.0, 2.0 * std::numbers::pi};
  for (int p = 0; p < panels; ++p) {
    std::complex<double> lo = za + d * static_cast<double>(p);
    for (int i = 0; i < n_per_panel; ++i) {
      c.z.push_back(lo + d * (0.5 + 0.5 * g.x[i]));
      c.w.push_back(d * (0.5 * g.w[i]) / itwopi);
    }
  }
  return c;
}

ContourRule polyline(const std::vector<std::complex<double>>& vertices, int n_per_panel,
                     int panels_per_edge) {
  if (vertices.size() < 2) throw std::invalid_argument("need at least two vertices");
  ContourRule c;
  for (size_t e = 0; e + 1 < vertices.size(); ++e) {
    ContourRule part = segment(vertices[e], vertices[e + 1], n_per_panel, panels_per_edge);
    c.z.insert(c.z.end(), part.z.begin(), part.z.end());
    c.w.insert(c.w.end(), part.w.begin(), part.w.end());
  }
  return c;
}

}  // namespace hlpp
