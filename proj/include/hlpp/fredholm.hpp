#pragma once

#include <complex>
#include <functional>

#include "hlpp/quadrature.hpp"

namespace hlpp {

using CKernel =
    std::function<std::complex<double>(std::complex<double>, std::complex<double>)>;

// determinant of a dense complex matrix by LU with partial pivoting, in place
std::complex<double> lu_det(std::vector<std::complex<double>>& a, int n);

// det(I + c K) on L^2 of the contour: Nystrom discretization with the rule's
// weights, symmetrized by sqrt-weight scaling.  The kernel acts as
//   (K f)(z) = integral K(z, z') f(z') dz'/(2 pi i),
// matching the weight normalization of ContourRule.
std::complex<double> fredholm_det(const CKernel& k, const ContourRule& rule,
                                  std::complex<double> c = 1.0);

// 1 + e1 + e2 + e3 of the same discretized operator; an independent check on
// the LU path when the operator norm is moderate
std::complex<double> fredholm_series3(const CKernel& k, const ContourRule& rule,
                                      std::complex<double> c = 1.0);

}  // namespace hlpp
