#pragma once

#include <complex>
#include <vector>

namespace hlpp {

struct QuadRule {
  std::vector<double> x, w;
};

// Gauss-Legendre nodes and weights on [-1, 1] (Newton on the three-term
// recurrence; accurate to machine precision for n into the thousands)
QuadRule gauss_legendre(int n);
// affine image on [a, b]
QuadRule gauss_legendre(int n, double a, double b);

// Contour rules pair nodes z with weights w normalized so that
//   integral f(z) dz / (2 pi i)  ~=  sum_j w_j f(z_j).
struct ContourRule {
  std::vector<std::complex<double>> z, w;
};

// circle |z - center| = radius, positively oriented, m equispaced nodes;
// the periodic trapezoid rule is spectrally accurate for analytic integrands
ContourRule circle(std::complex<double> center, double radius, int m);

// straight segment from za to zb, `panels` Gauss-Legendre panels of
// n_per_panel nodes each
ContourRule segment(std::complex<double> za, std::complex<double> zb, int n_per_panel,
                    int panels);

// concatenation of polyline vertices v0 -> v1 -> ... with GL panels per edge
ContourRule polyline(const std::vector<std::complex<double>>& vertices, int n_per_panel,
                     int panels_per_edge);

}  // namespace hlpp
