#include "hlpp/plane_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlpp {

long long PlanePartition::volume() const {
  long long v = 0;
  for (int x : h) v += x;
  return v;
}

bool PlanePartition::is_valid() const {
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) {
      int v = at(i, j);
      if (v < 0) return false;
      if (j > 1 && v > at(i, j - 1)) return false;
      if (i > 1 && v > at(i - 1, j)) return false;
    }
  return true;
}

Partition diagonal_slice(const PlanePartition& pp, int k) {
  std::vector<int> parts;
  int i = (k >= 0) ? 1 : 1 - k;
  int j = (k >= 0) ? 1 + k : 1;
  while (true) {
    int v = pp.at(i, j);
    if (v == 0) break;
    parts.push_back(v);
    ++i;
    ++j;
  }
  return Partition(std::move(parts));
}

std::map<int, Partition> diagonal_slices(const PlanePartition& pp) {
  std::map<int, Partition> out;
  for (int k = -(pp.rows - 1); k <= pp.cols - 1; ++k) {
    Partition la = diagonal_slice(pp, k);
    if (!la.empty()) out[k] = std::move(la);
  }
  return out;
}

PlanePartition from_slices(const std::map<int, Partition>& slices) {
  if (slices.empty()) return PlanePartition(0, 0);
  auto slice_at = [&](int k) -> Partition {
    auto it = slices.find(k);
    return it == slices.end() ? Partition{} : it->second;
  };
  int kmin = slices.begin()->first, kmax = slices.rbegin()->first;
  // interlacing towards the main diagonal on both sides of k = 0
  for (int k = kmin; k < 0; ++k)
    if (!interlaces(slice_at(k + 1), slice_at(k)))
      throw std::invalid_argument("slices do not interlace (left half)");
  for (int k = std::max(kmin, 0); k < kmax; ++k)
    if (!interlaces(slice_at(k), slice_at(k + 1)))
      throw std::invalid_argument("slices do not interlace (right half)");

  int rows = 0, cols = 0;
  for (const auto& [k, la] : slices) {
    rows = std::max(rows, la.length() + std::max(0, -k));
    cols = std::max(cols, la.length() + std::max(0, k));
  }
  PlanePartition pp(rows, cols);
  for (const auto& [k, la] : slices)
    for (int m = 1; m <= la.length(); ++m) {
      int i = m + std::max(0, -k), j = m + std::max(0, k);
      pp.set(i, j, la.part(m));
    }
  if (!pp.is_valid())
    throw std::invalid_argument("slices do not assemble into a plane partition");
  return pp;
}

std::vector<int> border_levels(const PlanePartition& pp) {
  const int R = pp.rows, C = pp.cols;
  auto idx = [C](int i, int j) { return static_cast<size_t>(i - 1) * C + (j - 1); };

  // component labels via flood fill over side-adjacent equal nonzero entries
  std::vector<int> comp(static_cast<size_t>(R) * C, -1);
  int ncomp = 0;
  std::vector<std::pair<int, int>> stack;
  for (int i = 1; i <= R; ++i)
    for (int j = 1; j <= C; ++j) {
      if (pp.at(i, j) == 0 || comp[idx(i, j)] != -1) continue;
      int id = ncomp++;
      int val = pp.at(i, j);
      stack.push_back({i, j});
      comp[idx(i, j)] = id;
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
          int na = a + di[d], nb = b + dj[d];
          if (na < 1 || nb < 1 || na > R || nb > C) continue;
          if (pp.at(na, nb) != val || comp[idx(na, nb)] != -1) continue;
          comp[idx(na, nb)] = id;
          stack.push_back({na, nb});
        }
      }
    }

  // level(i,j): distance along the diagonal to the first cell outside the
  // component; reverse raster order makes (i+1,j+1) available
  std::vector<int> level(static_cast<size_t>(R) * C, 0);
  for (int i = R; i >= 1; --i)
    for (int j = C; j >= 1; --j) {
      if (pp.at(i, j) == 0) continue;
      bool same = i + 1 <= R && j + 1 <= C && comp[idx(i + 1, j + 1)] == comp[idx(i, j)];
      level[idx(i, j)] = same ? 1 + level[idx(i + 1, j + 1)] : 1;
    }

  // border components: flood fill again, this time on (component, level)
  std::vector<int> out;
  std::vector<char> seen(static_cast<size_t>(R) * C, 0);
  for (int i = 1; i <= R; ++i)
    for (int j = 1; j <= C; ++j) {
      if (pp.at(i, j) == 0 || seen[idx(i, j)]) continue;
      int id = comp[idx(i, j)], lv = level[idx(i, j)];
      out.push_back(lv);
      stack.push_back({i, j});
      seen[idx(i, j)] = 1;
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
          int na = a + di[d], nb = b + dj[d];
          if (na < 1 || nb < 1 || na > R || nb > C) continue;
          if (seen[idx(na, nb)] || pp.at(na, nb) == 0) continue;
          if (comp[idx(na, nb)] != id || level[idx(na, nb)] != lv) continue;
          seen[idx(na, nb)] = 1;
          stack.push_back({na, nb});
        }
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

double border_polynomial(const PlanePartition& pp, double t) {
  double out = 1.0;
  for (int lv : border_levels(pp)) {
    double tp = 1.0;
    for (int i = 0; i < lv; ++i) tp *= t;
    out *= 1.0 - tp;
  }
  return out;
}

double slice_polynomial(const PlanePartition& pp, double t) {
  auto slices = diagonal_slices(pp);
  if (slices.empty()) return 1.0;
  auto slice_at = [&](int k) -> Partition {
    auto it = slices.find(k);
    return it == slices.end() ? Partition{} : it->second;
  };
  int kmin = slices.begin()->first, kmax = slices.rbegin()->first;
  double out = 1.0;
  for (int n = std::min(kmin, 0); n <= 0; ++n)
    out *= skew_psi(slice_at(n), slice_at(n - 1), t);
  for (int n = 1; n <= std::max(kmax + 1, 1); ++n)
    out *= skew_phi(slice_at(n - 1), slice_at(n), t);
  return out;
}

}  // namespace hlpp
