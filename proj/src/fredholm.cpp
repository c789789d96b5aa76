#include "hlpp/fredholm.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hlpp {

std::complex<double> lu_det(std::vector<std::complex<double>>& a, int n) {
  if (static_cast<size_t>(n) * n != a.size()) throw std::invalid_argument("matrix size mismatch");
  std::complex<double> det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(a[static_cast<size_t>(col) * n + col]);
    for (int rrow = col + 1; rrow < n; ++rrow) {
      double v = std::abs(a[static_cast<size_t>(rrow) * n + col]);
      if (v > best) {
        best = v;
        piv = rrow;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<size_t>(piv) * n + j], a[static_cast<size_t>(col) * n + j]);
      det = -det;
    }
    std::complex<double> d = a[static_cast<size_t>(col) * n + col];
    det *= d;
    for (int rrow = col + 1; rrow < n; ++rrow) {
      std::complex<double> f = a[static_cast<size_t>(rrow) * n + col] / d;
      if (f == 0.0) continue;
      for (int j = col + 1; j < n; ++j)
        a[static_cast<size_t>(rrow) * n + j] -= f * a[static_cast<size_t>(col) * n + j];
    }
  }
  return det;
}

namespace {

// symmetrized Nystrom matrix A_ij = c sqrt(w_i) K(z_i, z_j) sqrt(w_j)
std::vector<std::complex<double>> nystrom(const CKernel& k, const ContourRule& rule,
                                          std::complex<double> c) {
  int n = static_cast<int>(rule.z.size());
  std::vector<std::complex<double>> s(n);
  for (int i = 0; i < n; ++i) s[i] = std::sqrt(rule.w[i]);
  std::vector<std::complex<double>> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<size_t>(i) * n + j] = c * s[i] * k(rule.z[i], rule.z[j]) * s[j];
  return a;
}

}  // namespace

std::complex<double> fredholm_det(const CKernel& k, const ContourRule& rule,
                                  std::complex<double> c) {
  int n = static_cast<int>(rule.z.size());
  auto a = nystrom(k, rule, c);
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i) * n + i] += 1.0;
  return lu_det(a, n);
}

std::complex<double> fredholm_series3(const CKernel& k, const ContourRule& rule,
                                      std::complex<double> c) {
  int n = static_cast<int>(rule.z.size());
  auto a = nystrom(k, rule, c);
  std::complex<double> tr = 0.0, tr2 = 0.0, tr3 = 0.0;
  for (int i = 0; i < n; ++i) tr += a[static_cast<size_t>(i) * n + i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      tr2 += a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(j) * n + i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::complex<double> dot = 0.0;
      for (int l = 0; l < n; ++l)
        dot += a[static_cast<size_t>(j) * n + l] * a[static_cast<size_t>(l) * n + i];
      tr3 += a[static_cast<size_t>(i) * n + j] * dot;
    }
  std::complex<double> e1 = tr;
  std::complex<double> e2 = (tr * tr - tr2) / 2.0;
  std::complex<double> e3 = (tr * tr * tr - 3.0 * tr * tr2 + 2.0 * tr3) / 6.0;
  return 1.0 + e1 + e2 + e3;
}

}  // namespace hlpp
