#pragma once

#include <complex>
#include <vector>

#include "hlpp/fredholm.hpp"
#include "hlpp/quadrature.hpp"

namespace hlpp {

// E[t^{-k * largest column}] for the measure with alphabets X, Y, by nested
// contour integration over circles of radius t^{a-k} rho^{k-a}.  Only k = 1, 2
// are supported; the representation requires max(y) < t^k and is rejected
// otherwise.
double moment_contour(int k, const std::vector<double>& x, const std::vector<double>& y,
                      double t, int nodes = 512);

// ---------------------------------------------------------------------------
// Kernel of det(I + K) = E[ 1 / ((1-t) u t^{-largest column}; t)_inf ] at
// finite alphabets X, Y.  The operator acts on the circle |w| = 1/t with
// measure dw/(2 pi i); entries are Mellin-Barnes integrals over Re s = 1/2.

struct LineKernelOptions {
  double half_length = 0.0;    // s-line truncation; 0 picks 40/(pi - |arg(-zeta)|)
  double tail_target = 1e-10;  // certified bound on the discarded tail
  int panel_nodes = 16;        // Gauss-Legendre nodes per panel on the line
  int panels = 0;              // 0: about one panel per two units of line
};

CKernel finite_kernel(std::vector<double> x, std::vector<double> y, double t,
                      std::complex<double> u, LineKernelOptions opt = {});

// the circle the determinant lives on
ContourRule finite_kernel_contour(double t, int m);

// ---------------------------------------------------------------------------
// Rescaled kernels for the two limit regimes.  Both arise from the circle
// kernel by an exponential change of variables and collapse of the s-line
// onto a fundamental segment, which replaces 1/sin by its periodization G.

struct RescaledKernelOptions {
  double wedge_slope = 0.05;  // opening A of the wedge contour (GUE case only)
  int z_panel_nodes = 12;     // inner Z-integral quadrature
  int z_panels = 16;
  double series_tol = 1e-12;  // truncation target for the periodized sum G
  int alphabet = -1;          // >= 0 cuts the geometric alphabet a r^j for
                              // cross-checks against finite determinants
};

// GUE-case kernel; det(I - K) over gue_wedge_contour equals the t-Laplace
// transform E[1/(zeta t^{1 - largest column}; t)_inf].  The inner integral
// runs over the vertical segment through A pi, which the wedge contour of
// the Z variable deforms to without crossing poles.
CKernel gue_scaled_kernel(double a, double r, double t, std::complex<double> zeta,
                          RescaledKernelOptions opt = {});

// the wedge { -A|y| + i y : y in [-pi, pi] }, split at the corner
ContourRule gue_wedge_contour(double A, int panel_nodes, int panels_per_half);

// CDRP-case kernel; det(I - K) over cdrp_segment_contour equals the same
// t-Laplace transform.  Variables here are the GUE ones divided by -log t,
// so the contours are the fixed vertical segments Re W = -1/4, Re Z = 1/4.
CKernel cdrp_scaled_kernel(double a, double r, double t, std::complex<double> zeta,
                           RescaledKernelOptions opt = {});

// { -1/4 + i y : |y| <= pi / (-log t) }
ContourRule cdrp_segment_contour(double t, int panel_nodes, int panels);

// ---------------------------------------------------------------------------
// Airy kernel, in the double-contour representation (rays at angles
// +-2pi/3 for w carrying eta, +-pi/3 for z carrying eta') and in the real
// representation int_0^inf Ai(eta + s) Ai(eta' + s) ds.

std::complex<double> airy_kernel_contour(double eta, double eta_p, int panel_nodes = 12,
                                         int panels_per_edge = 10, double ray_length = 8.0);

double airy_kernel_real(double eta, double eta_p);

// ---------------------------------------------------------------------------
// Monotonicity report for Re(S_{a,r}(z) - c_1 z) along the rays
// z = (+-A + i eps) y, y in [0, pi]: descending on the +A rays, ascending on
// the -A rays.  The exact directional derivative is sampled on a uniform grid.

struct DescentReport {
  int violations = 0;
  double worst = 0.0;    // most positive descending slope (or negative ascending)
  double worst_y = 0.0;  // grid location of the worst slope
};

DescentReport descent_check(double a, double r, double A, int grid_points = 200);

}  // namespace hlpp
