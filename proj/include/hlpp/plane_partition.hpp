#pragma once
// Plane partitions stored as a height array over a rows x cols base, with
// the two combinatorial weights attached to them: the border-component
// polynomial A_pi(t) and the equivalent slice product B_pi(t) built from the
// Hall-Littlewood branching weights along the diagonal slice chain.

#include <map>
#include <vector>

#include "hlpp/partition.hpp"

namespace hlpp {

struct PlanePartition {
  int rows = 0, cols = 0;
  std::vector<int> h;  // row-major, h[(i-1)*cols + (j-1)]

  PlanePartition() = default;
  PlanePartition(int rows_, int cols_)
      : rows(rows_), cols(cols_), h(static_cast<size_t>(rows_) * cols_, 0) {}

  // 1-based, entries outside the stored base read as 0
  int at(int i, int j) const {
    if (i < 1 || j < 1 || i > rows || j > cols) return 0;
    return h[static_cast<size_t>(i - 1) * cols + (j - 1)];
  }
  void set(int i, int j, int v) { h[static_cast<size_t>(i - 1) * cols + (j - 1)] = v; }

  long long volume() const;
  // rows and columns weakly decreasing, entries nonnegative
  bool is_valid() const;

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
};

// Diagonal slices lambda^k = (pi_{i,i+k}), indexed by k = column - row.
// Keys with empty slices are omitted from the map.
Partition diagonal_slice(const PlanePartition& pp, int k);
std::map<int, Partition> diagonal_slices(const PlanePartition& pp);

// Inverse of diagonal_slices. Requires the slices to interlace towards the
// main diagonal (... < la^{-1} < la^0 > la^1 > ...); throws otherwise.
PlanePartition from_slices(const std::map<int, Partition>& slices);

// Multiset of border-component levels: a connected component of the filling
// is a maximal side-connected set of equal entries; within it the level of a
// cell (i,j) is the smallest l >= 1 with (i+l, j+l) outside the component,
// and a border component is a maximal connected set of cells of one level.
// A_pi(t) is the product of (1 - t^level) over all border components.
std::vector<int> border_levels(const PlanePartition& pp);
double border_polynomial(const PlanePartition& pp, double t);

// B_pi(t) = prod_{n <= 0} psi_{la^n / la^{n-1}}(t) * prod_{n >= 1}
// phi_{la^{n-1} / la^n}(t) over the slice chain, empty slices at the ends.
// Agrees with border_polynomial (generalized MacMahon identity).
double slice_polynomial(const PlanePartition& pp, double t);

}  // namespace hlpp
