#pragma once

#include <complex>
#include <functional>

#include "hlpp/plane_partition.hpp"

namespace hlpp {

// Parameters of the measure on plane partitions proportional to
// r^|pi| A_pi(t), where A_pi is the border polynomial.
struct HLParams {
  double r = 0.5;
  double t = 0.0;
  // requires 0 < r < 1 and 0 <= t < 1
  void validate() const;
};

// unnormalized weight r^|pi| A_pi(t)
double hl_weight(const PlanePartition& pp, const HLParams& p);

// normalization over all plane partitions,
//   Z = prod_{n>=1} ((1 - t r^n) / (1 - r^n))^n
double partition_function(const HLParams& p);

// normalization over plane partitions whose base fits in an N x N square,
//   Z_N = prod_{i,j=1}^{N} (1 - t r^{i+j-1}) / (1 - r^{i+j-1})
double partition_function_box(int N, const HLParams& p);

// number of plane partitions with base inside rows x cols and entries
// <= hmax (MacMahon's box formula), as a double to allow large boxes
double box_count(int rows, int cols, int hmax);

// visit every plane partition with base inside rows x cols and entries
// <= hmax, in lexicographic order of the row-major height vector
void enumerate_box(int rows, int cols, int hmax,
                   const std::function<void(const PlanePartition&)>& visit);

// One diagonal slice of the measure is Hall-Littlewood distributed:
//   Prob(la) = P_la(X) Q_la(Y) / Pi(X; Y)   with   X = Y = (a, ar, ..., ar^{N-1}).
// The slice at offset k corresponds to a = r^{(1+|k|)/2} and N large; small
// N versions are what the Fredholm-determinant identities are tested against.
struct SliceMeasure {
  int N = 1;
  double a = 0.5;
  double r = 0.5;
  double t = 0.0;
  // requires N >= 1, 0 < a < 1, 0 <= r < 1, 0 <= t < 1, and a r^{i-1}
  // strictly below 1 so the normalization converges
  void validate() const;
};

// Cauchy normalization Pi(X; Y) = prod_{i,j} (1 - t x_i y_j)/(1 - x_i y_j)
double cauchy_product(const SliceMeasure& m);

// Hall-Littlewood P_la(x_1..x_N) for every la with la_1 <= pmax, built by
// the single-variable branching rule (psi factors); keys with value 0 omitted
std::map<Partition, double> hl_p_table(const SliceMeasure& m, int pmax);

// same for Q_la(y_1..y_N), built independently via the phi branching rule
std::map<Partition, double> hl_q_table(const SliceMeasure& m, int pmax);

// E[f(la)] under the slice measure, by summation over la_1 <= pmax plus a
// certified geometric tail estimate.  Throws std::runtime_error when the
// tail cannot be certified below tol.
std::complex<double> exact_expectation(
    const SliceMeasure& m, const std::function<std::complex<double>(const Partition&)>& f,
    int pmax = 40, double tol = 1e-10);

}  // namespace hlpp
