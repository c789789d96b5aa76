#pragma once

namespace hlpp {

// GUE Tracy-Widom distribution function det(I - K_Ai) restricted to (x, oo),
// evaluated with an order-point Nystrom discretization.  Accurate to well
// below 1e-8 over the range where the value is not itself below it.
double f_gue(double x, int order = 64);

// Laplace-transform value det(I - K_crossover) on (0, oo) at crossover time
// T, where the kernel tempers the Airy product with the Fermi factor
// e^x / (e^x + e^{-s/sigma}), sigma = (2/T)^{1/3}.  Decreasing in x, from 1
// at -oo to 0 at +oo: it is E[exp(-e^x W)] for a positive variable W, not a
// CDF.  For T -> oo it tends to f_gue of the rescaled argument.
double f_cdrp(double x, double T, int order = 64);

}  // namespace hlpp
