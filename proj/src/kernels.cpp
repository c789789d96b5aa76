#include "hlpp/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hlpp/specfun.hpp"

namespace hlpp {

namespace {

using cplx = std::complex<double>;
using std::numbers::pi;

void check_unit_interval(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in (0,1)");
}

void check_alphabet(const std::vector<double>& a, const char* name) {
  for (double v : a)
    if (!(v > 0.0 && v < 1.0))
      throw std::invalid_argument(std::string(name) + " entries must lie in (0,1)");
}

// principal log of -zeta; the positive real axis in zeta is the branch cut
// shared by every representation here, so it is rejected outright
cplx log_minus(cplx zeta) {
  if (zeta.imag() == 0.0 && zeta.real() >= 0.0)
    throw std::invalid_argument("parameter must avoid the positive real half-axis");
  return std::log(-zeta);
}

// S_{a,r} with an optional finite cut of the geometric alphabet; the cut
// variant backs cross-checks against determinants over explicit finite lists
cplx s_ar_cut(cplx z, double a, double r, int alphabet) {
  if (alphabet < 0) return s_ar(z, a, r);
  if (a * std::exp(std::abs(z.real())) >= 1.0)
    throw std::invalid_argument("s_ar: Re z outside the analyticity strip");
  cplx acc = 0.0;
  const cplx ep = std::exp(z), em = std::exp(-z);
  double arj = a;
  for (int j = 0; j < alphabet; ++j, arj *= r)
    acc += std::log(1.0 + arj * ep) - std::log(1.0 + arj * em);
  return acc;
}

// derivative of S_{a,r}, used for exact slope checks along descent rays
cplx s_ar_prime(cplx z, double a, double r) {
  if (a * std::exp(std::abs(z.real())) >= 1.0)
    throw std::invalid_argument("s_ar_prime: Re z outside the analyticity strip");
  const cplx ep = std::exp(z), em = std::exp(-z);
  cplx acc = 0.0;
  double arj = a;
  for (int j = 0; j < 40000 && arj > 1e-300; ++j, arj *= r) {
    cplx term = arj * ep / (1.0 + arj * ep) + arj * em / (1.0 + arj * em);
    acc += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) break;
  }
  return acc;
}

// composite Gauss-Legendre nodes/weights on [lo, hi]
QuadRule composite_gl(double lo, double hi, int panel_nodes, int panels) {
  QuadRule out;
  double step = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    QuadRule g = gauss_legendre(panel_nodes, lo + p * step, lo + (p + 1) * step);
    out.x.insert(out.x.end(), g.x.begin(), g.x.end());
    out.w.insert(out.w.end(), g.w.begin(), g.w.end());
  }
  return out;
}

}  // namespace

double moment_contour(int k, const std::vector<double>& x, const std::vector<double>& y,
                      double t, int nodes) {
  if (k != 1 && k != 2) throw std::invalid_argument("moment order must be 1 or 2");
  check_unit_interval(t, "t");
  check_alphabet(x, "x");
  check_alphabet(y, "y");
  double eps = std::pow(t, k);
  for (double yi : y)
    if (yi >= eps)
      throw std::invalid_argument("moment representation needs max(y) < t^k");

  // circles of radius t^{a-k} rho^{k-a}: the innermost has radius one, each
  // outer circle strictly contains 1/t times the next, and the outermost
  // must stay inside the disk of radius t^{-k}
  const double rho = 1.1;
  if (rho >= 1.0 / t) throw std::invalid_argument("moment contours need t < 1/1.1");
  double r_outer = std::pow(t, 1 - k) * std::pow(rho, k - 1);
  if (r_outer >= 1.0 / eps)
    throw std::invalid_argument("outer moment contour exceeds the allowed disk");

  auto f = [&](cplx z) {
    cplx prod = 1.0 / z;
    for (size_t j = 0; j < x.size(); ++j)
      prod *= (z - x[j] / t) * (1.0 - z * y[j]) / ((z - x[j]) * (1.0 - t * z * y[j]));
    return prod;
  };

  if (k == 1) {
    ContourRule c = circle(0.0, 1.0, nodes);
    cplx acc = 0.0;
    for (size_t i = 0; i < c.z.size(); ++i) acc += c.w[i] * f(c.z[i]);
    return acc.real();
  }

  ContourRule c1 = circle(0.0, r_outer, nodes), c2 = circle(0.0, 1.0, nodes);
  std::vector<cplx> f1(c1.z.size()), f2(c2.z.size());
  for (size_t i = 0; i < c1.z.size(); ++i) f1[i] = c1.w[i] * f(c1.z[i]);
  for (size_t i = 0; i < c2.z.size(); ++i) f2[i] = c2.w[i] * f(c2.z[i]);
  cplx acc = 0.0;
  for (size_t i = 0; i < c1.z.size(); ++i)
    for (size_t j = 0; j < c2.z.size(); ++j)
      acc += f1[i] * f2[j] * (c1.z[i] - c2.z[j]) / (c1.z[i] - c2.z[j] / t);
  return acc.real();
}

CKernel finite_kernel(std::vector<double> x, std::vector<double> y, double t,
                      std::complex<double> u, LineKernelOptions opt) {
  check_unit_interval(t, "t");
  check_alphabet(x, "x");
  check_alphabet(y, "y");
  if (u == 0.0) return [](cplx, cplx) { return cplx(0.0); };

  const cplx lz = log_minus(u * (1.0 / t - 1.0));  // log(-zeta), zeta=(1/t-1)u
  const double theta = std::abs(lz.imag());
  const double rmod = std::exp(lz.real());

  // uniform bound on |g| over the circle |w| = |w'| = 1/t and Re s = 1/2;
  // every evaluation is checked against it
  double bound = 1.0 / (std::pow(t, -1.5) - 1.0 / t);
  for (size_t j = 0; j < x.size(); ++j)
    bound *= (1.0 + x[j]) * (1.0 + y[j] / std::sqrt(t)) /
             ((1.0 - x[j] * std::sqrt(t)) * (1.0 - y[j]));

  double half = opt.half_length > 0.0 ? opt.half_length : 40.0 / (pi - theta);
  double tail = 2.0 * std::sqrt(rmod) * bound * std::exp((theta - pi) * half) / (pi - theta);
  if (tail > opt.tail_target)
    throw std::invalid_argument("s-line truncation tail exceeds the target");
  // the integrand is analytic only in a strip of half-width 1/2 around the
  // line (sine poles at the integers), so panels near unit width are needed
  int panels = opt.panels > 0 ? opt.panels : std::max(8, (int)std::ceil(2.0 * half));

  QuadRule line = composite_gl(-half, half, opt.panel_nodes, panels);
  size_t m = line.x.size();
  // per-node prefactor (1/2pi) Gamma(-s)Gamma(1+s) (-zeta)^s and powers of t
  std::vector<cplx> pref(m), ts(m), tms(m);
  for (size_t i = 0; i < m; ++i) {
    cplx s(0.5, line.x[i]);
    ts[i] = std::exp(s * std::log(t));
    tms[i] = 1.0 / ts[i];
    pref[i] = (line.w[i] / (2.0 * pi)) * (-pi / std::sin(pi * s)) * std::exp(s * lz);
  }

  return [=](cplx w, cplx wp) {
    // the certified bound holds on the circle |w| = |w'| = 1/t used for the
    // determinant; analytic continuation slightly inside is allowed unchecked
    const bool on_circle = std::abs(std::abs(w) * t - 1.0) < 1e-9 &&
                           std::abs(std::abs(wp) * t - 1.0) < 1e-9;
    cplx acc = 0.0;
    const cplx wt = w * t;
    for (size_t i = 0; i < m; ++i) {
      cplx g = 1.0 / (w * tms[i] - wp);
      for (size_t j = 0; j < x.size(); ++j)
        g *= (1.0 - x[j] / wt) * (1.0 - y[j] * wt * tms[i]) /
             ((1.0 - x[j] * ts[i] / wt) * (1.0 - y[j] * wt));
      if (on_circle && std::abs(g) > bound * (1.0 + 1e-8))
        throw std::runtime_error("finite kernel integrand exceeded its certified bound");
      acc += pref[i] * g;
    }
    return acc;
  };
}

ContourRule finite_kernel_contour(double t, int m) {
  check_unit_interval(t, "t");
  return circle(0.0, 1.0 / t, m);
}

CKernel gue_scaled_kernel(double a, double r, double t, std::complex<double> zeta,
                          RescaledKernelOptions opt) {
  check_unit_interval(a, "a");
  check_unit_interval(r, "r");
  check_unit_interval(t, "t");
  const double lt = -std::log(t);
  const double A = opt.wedge_slope;
  if (!(A > 0.0)) throw std::invalid_argument("wedge slope must be positive");
  if (2.0 * pi * A >= lt)
    throw std::invalid_argument("wedge slope too large: periodization poles cross the contour");
  if (a * std::exp(A * pi) >= 1.0)
    throw std::invalid_argument("wedge contour leaves the analyticity strip of S");

  const cplx lz = log_minus(zeta);
  const double theta = std::abs(lz.imag());
  const int kmax =
      1 + (int)std::ceil(-std::log(opt.series_tol) * lt / (2.0 * pi * (pi - theta)));

  // inner integral over the vertical segment through A pi (the wedge form of
  // the Z contour deforms to it without crossing poles); S is cached on it
  ContourRule zr =
      segment(cplx(A * pi, -pi), cplx(A * pi, pi), opt.z_panel_nodes, opt.z_panels);
  size_t m = zr.z.size();
  std::vector<cplx> ez(m), withz(m);
  for (size_t i = 0; i < m; ++i) {
    ez[i] = std::exp(zr.z[i]);
    withz[i] = zr.w[i] * std::exp(s_ar_cut(zr.z[i], a, r, opt.alphabet));
  }

  return [=](cplx w, cplx wp) {
    const cplx esw = std::exp(s_ar_cut(w, a, r, opt.alphabet));
    const cplx ew = std::exp(w), ewp = std::exp(wp);
    cplx acc = 0.0;
    for (size_t i = 0; i < m; ++i) {
      const cplx dz = zr.z[i] - w;
      cplx g = 0.0;
      for (int k = -kmax; k <= kmax; ++k)
        g += std::exp(cplx(0.0, 2.0 * pi * k / lt) * lz) /
             std::sin(-pi * (dz + cplx(0.0, 2.0 * pi * k)) / lt);
      g *= pi / lt;
      acc += withz[i] * std::exp(dz / lt * lz) * g / (ewp - ez[i]);
    }
    return ew * acc / esw;
  };
}

ContourRule gue_wedge_contour(double A, int panel_nodes, int panels_per_half) {
  if (!(A > 0.0)) throw std::invalid_argument("wedge slope must be positive");
  return polyline({cplx(-A * pi, -pi), cplx(0.0, 0.0), cplx(-A * pi, pi)}, panel_nodes,
                  panels_per_half);
}

CKernel cdrp_scaled_kernel(double a, double r, double t, std::complex<double> zeta,
                           RescaledKernelOptions opt) {
  check_unit_interval(a, "a");
  check_unit_interval(r, "r");
  check_unit_interval(t, "t");
  const double lt = -std::log(t);
  if (a * std::exp(lt / 4.0) >= 1.0)
    throw std::invalid_argument("segment contours leave the analyticity strip of S");

  const cplx lz = log_minus(zeta);
  const double theta = std::abs(lz.imag());
  const int kmax =
      1 + (int)std::ceil(-std::log(opt.series_tol) * lt / (2.0 * pi * (pi - theta)));
  const double period = 2.0 * pi / lt;

  ContourRule zr = segment(cplx(0.25, -pi / lt), cplx(0.25, pi / lt), opt.z_panel_nodes,
                           opt.z_panels);
  size_t m = zr.z.size();
  std::vector<cplx> tz(m), withz(m);
  for (size_t i = 0; i < m; ++i) {
    tz[i] = std::exp(lt * zr.z[i]);  // t^{-Z}
    withz[i] = zr.w[i] * std::exp(s_ar_cut(lt * zr.z[i], a, r, opt.alphabet));
  }

  return [=](cplx w, cplx wp) {
    const cplx esw = std::exp(s_ar_cut(lt * w, a, r, opt.alphabet));
    const cplx tw = std::exp(lt * w), twp = std::exp(lt * wp);  // t^{-W}, t^{-W'}
    cplx acc = 0.0;
    for (size_t i = 0; i < m; ++i) {
      const cplx dwz = w - zr.z[i];
      cplx g = 0.0;
      for (int k = -kmax; k <= kmax; ++k)
        g += std::exp(cplx(0.0, k * period) * lz) /
             std::sin(pi * dwz - cplx(0.0, pi * k * period));
      g *= pi;
      acc += withz[i] * g * lt * std::exp(-dwz * lz) / (twp - tz[i]);
    }
    return tw * acc / esw;
  };
}

ContourRule cdrp_segment_contour(double t, int panel_nodes, int panels) {
  check_unit_interval(t, "t");
  const double h = pi / -std::log(t);
  return segment(cplx(-0.25, -h), cplx(-0.25, h), panel_nodes, panels);
}

std::complex<double> airy_kernel_contour(double eta, double eta_p, int panel_nodes,
                                         int panels_per_edge, double ray_length) {
  // w rays open left through -1/2 and carry eta, z rays open right through
  // +1/2 and carry eta'; the offsets keep the contours a unit apart
  const cplx wj = std::polar(1.0, 2.0 * pi / 3.0), zj = std::polar(1.0, pi / 3.0);
  ContourRule wr = polyline({-0.5 + ray_length * std::conj(wj), cplx(-0.5, 0.0),
                             -0.5 + ray_length * wj},
                            panel_nodes, panels_per_edge);
  ContourRule zr = polyline({0.5 + ray_length * std::conj(zj), cplx(0.5, 0.0),
                             0.5 + ray_length * zj},
                            panel_nodes, panels_per_edge);
  cplx acc = 0.0;
  for (size_t i = 0; i < wr.z.size(); ++i) {
    const cplx w = wr.z[i];
    const cplx fw = std::exp(-(w * w * w / 3.0 - w * eta)) * wr.w[i];
    for (size_t j = 0; j < zr.z.size(); ++j) {
      const cplx z = zr.z[j];
      acc += fw * zr.w[j] * std::exp(z * z * z / 3.0 - z * eta_p) / (z - w);
    }
  }
  return acc;
}

double airy_kernel_real(double eta, double eta_p) {
  // integrate to where both Airy factors are far into their decaying tails
  double upper = std::max(24.0, 12.0 - std::min(eta, eta_p));
  int panels = (int)std::ceil(upper);
  QuadRule g = composite_gl(0.0, upper, 10, panels);
  double acc = 0.0;
  for (size_t i = 0; i < g.x.size(); ++i)
    acc += g.w[i] * airy_ai(eta + g.x[i]) * airy_ai(eta_p + g.x[i]);
  return acc;
}

DescentReport descent_check(double a, double r, double A, int grid_points) {
  check_unit_interval(a, "a");
  check_unit_interval(r, "r");
  if (!(A > 0.0)) throw std::invalid_argument("ray slope must be positive");
  const double c1 = s_ar_coefficient(0, a, r);
  DescentReport rep;

  for (double eps : {1.0, -1.0}) {
    for (double side : {1.0, -1.0}) {
      const cplx dir(side * A, eps);
      for (int i = 1; i <= grid_points; ++i) {
        double y = pi * i / (grid_points + 1);
        // d/dy Re(S(dir y) - c1 dir y), signed so that positive always
        // means the wrong direction for the respective ray
        double slope = side * (dir * (s_ar_prime(dir * y, a, r) - c1)).real();
        if (slope > 1e-12) {
          ++rep.violations;
          if (slope > rep.worst) {
            rep.worst = slope;
            rep.worst_y = y;
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace hlpp
