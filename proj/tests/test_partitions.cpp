#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "doctest.h"
#include "hlpp/partition.hpp"
#include "hlpp/plane_partition.hpp"

using hlpp::Partition;
using hlpp::PlanePartition;

namespace {

// every partition whose parts fit in a box of `len` rows and `maxpart` columns
std::vector<Partition> partitions_in_box(int len, int maxpart) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int depth, int bound) {
    out.push_back(Partition(cur));
    if (depth == len) return;
    for (int p = bound; p >= 1; --p) {
      cur.push_back(p);
      rec(depth + 1, p);
      cur.pop_back();
    }
  };
  rec(0, maxpart);
  return out;
}

// every plane partition with base inside rows x cols and entries <= hmax
std::vector<PlanePartition> plane_partitions_in_box(int rows, int cols, int hmax) {
  std::vector<PlanePartition> out;
  PlanePartition pp(rows, cols);
  std::function<void(int)> rec = [&](int cell) {
    if (cell == rows * cols) {
      out.push_back(pp);
      return;
    }
    int i = cell / cols + 1, j = cell % cols + 1;
    int up = (i > 1) ? pp.at(i - 1, j) : hmax;
    int left = (j > 1) ? pp.at(i, j - 1) : hmax;
    for (int v = 0; v <= std::min(up, left); ++v) {
      pp.set(i, j, v);
      rec(cell + 1);
    }
    pp.set(i, j, 0);
  };
  rec(0);
  return out;
}

// Independent route to phi/psi: the factor index sets are the multiset
// differences of the part multisets, S(la) \ S(mu) for phi and S(mu) \ S(la)
// for psi.  Roundabout for production code, but a good cross-check because it
// never looks at conjugates.
double phi_by_multiset(const Partition& la, const Partition& mu, double t) {
  if (!hlpp::interlaces(la, mu)) return 0.0;
  std::map<int, int> diff;
  for (int p : la.parts) ++diff[p];
  for (int p : mu.parts) --diff[p];
  double out = 1.0;
  for (auto [size, cnt] : diff)
    for (int c = 0; c < cnt; ++c)
      out *= 1.0 - std::pow(t, hlpp::multiplicity(la, size));
  return out;
}

double psi_by_multiset(const Partition& la, const Partition& mu, double t) {
  if (!hlpp::interlaces(la, mu)) return 0.0;
  std::map<int, int> diff;
  for (int p : mu.parts) ++diff[p];
  for (int p : la.parts) --diff[p];
  double out = 1.0;
  for (auto [size, cnt] : diff)
    for (int c = 0; c < cnt; ++c)
      out *= 1.0 - std::pow(t, hlpp::multiplicity(mu, size));
  return out;
}

}  // namespace

TEST_CASE("partition normalization and accessors") {
  Partition la{5, 3, 3, 2, 2};
  CHECK(la.length() == 5);
  CHECK(la.weight() == 15);
  CHECK(la.part(1) == 5);
  CHECK(la.part(5) == 2);
  CHECK(la.part(6) == 0);
  CHECK(la.part(100) == 0);

  CHECK(Partition{}.empty());
  CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(hlpp::conjugate(Partition{5, 3, 3, 2, 2}) == Partition{5, 5, 3, 1, 1});
  CHECK(hlpp::conjugate(Partition{5, 5, 3, 1, 1}) == Partition{5, 3, 3, 2, 2});
  CHECK(hlpp::conjugate(Partition{}) == Partition{});
  CHECK(hlpp::conjugate(Partition{1}) == Partition{1});
  CHECK(hlpp::conjugate(Partition{4}) == Partition{1, 1, 1, 1});

  // involution over a whole box
  for (const auto& la : partitions_in_box(4, 4))
    CHECK(hlpp::conjugate(hlpp::conjugate(la)) == la);
}

TEST_CASE("multiplicity") {
  Partition la{5, 3, 3, 2, 2};
  CHECK(hlpp::multiplicity(la, 5) == 1);
  CHECK(hlpp::multiplicity(la, 3) == 2);
  CHECK(hlpp::multiplicity(la, 2) == 2);
  CHECK(hlpp::multiplicity(la, 4) == 0);
  CHECK(hlpp::multiplicity(la, 1) == 0);

  // m_c(la) = la'_c - la'_{c+1}
  for (const auto& mu : partitions_in_box(4, 4)) {
    Partition muc = hlpp::conjugate(mu);
    for (int c = 1; c <= 5; ++c)
      CHECK(hlpp::multiplicity(mu, c) == muc.part(c) - muc.part(c + 1));
  }
}

TEST_CASE("interlacing") {
  // horizontal strip: (5,3,3,2,2) over (3,3,2,2,1)
  CHECK(hlpp::interlaces(Partition{5, 3, 3, 2, 2}, Partition{3, 3, 2, 2, 1}));
  CHECK_FALSE(hlpp::interlaces(Partition{3, 3, 2, 2, 1}, Partition{5, 3, 3, 2, 2}));
  CHECK(hlpp::interlaces(Partition{1}, Partition{}));
  CHECK_FALSE(hlpp::interlaces(Partition{}, Partition{1}));
  CHECK(hlpp::interlaces(Partition{}, Partition{}));
  CHECK(hlpp::interlaces(Partition{2, 2}, Partition{2}));
  // two boxes would be added in the same column
  CHECK_FALSE(hlpp::interlaces(Partition{2, 2}, Partition{}));

  // against the definitional scan la_1 >= mu_1 >= la_2 >= mu_2 >= ...
  for (const auto& la : partitions_in_box(3, 3))
    for (const auto& mu : partitions_in_box(3, 3)) {
      bool expect = true;
      for (int i = 1; i <= 4; ++i)
        if (la.part(i) < mu.part(i) || mu.part(i) < la.part(i + 1)) expect = false;
      CHECK(hlpp::interlaces(la, mu) == expect);
    }
}

TEST_CASE("skew phi and psi on pinned examples") {
  const double t = 0.37;
  CHECK(hlpp::skew_phi(Partition{1}, Partition{}, t) == doctest::Approx(1 - t).epsilon(1e-14));
  CHECK(hlpp::skew_psi(Partition{1}, Partition{}, t) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(hlpp::skew_phi(Partition{2, 1}, Partition{1}, t) == doctest::Approx(1 - t).epsilon(1e-14));
  CHECK(hlpp::skew_psi(Partition{2, 1}, Partition{1}, t) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(hlpp::skew_phi(Partition{2, 2}, Partition{2}, t) ==
        doctest::Approx(1 - t * t).epsilon(1e-14));
  CHECK(hlpp::skew_psi(Partition{2, 2}, Partition{2}, t) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(hlpp::skew_psi(Partition{2}, Partition{1}, t) == doctest::Approx(1 - t).epsilon(1e-14));
  CHECK(hlpp::skew_phi(Partition{1, 1}, Partition{1}, t) ==
        doctest::Approx(1 - t * t).epsilon(1e-14));

  // no interlacing, no weight
  CHECK(hlpp::skew_phi(Partition{2, 2}, Partition{}, t) == 0.0);
  CHECK(hlpp::skew_psi(Partition{1}, Partition{2}, t) == 0.0);
}

TEST_CASE("skew phi and psi against the multiset-difference form") {
  auto all = partitions_in_box(4, 4);
  for (double t : {-0.5, 0.0, 0.3, 0.7}) {
    for (const auto& la : all)
      for (const auto& mu : all) {
        CHECK(hlpp::skew_phi(la, mu, t) ==
              doctest::Approx(phi_by_multiset(la, mu, t)).epsilon(1e-13));
        CHECK(hlpp::skew_psi(la, mu, t) ==
              doctest::Approx(psi_by_multiset(la, mu, t)).epsilon(1e-13));
      }
  }
}

TEST_CASE("b_norm") {
  const double t = 0.37;
  // b_la = prod over part sizes c of (1-t)(1-t^2)...(1-t^{m_c})
  CHECK(hlpp::b_norm(Partition{}, t) == doctest::Approx(1.0));
  CHECK(hlpp::b_norm(Partition{3}, t) == doctest::Approx(1 - t));
  CHECK(hlpp::b_norm(Partition{2, 2, 1}, t) ==
        doctest::Approx((1 - t) * (1 - t * t) * (1 - t)).epsilon(1e-14));
  CHECK(hlpp::b_norm(Partition{1, 1, 1}, t) ==
        doctest::Approx((1 - t) * (1 - t * t) * (1 - t * t * t)).epsilon(1e-14));
}

TEST_CASE("plane partition basics") {
  PlanePartition pp(2, 3);
  CHECK(pp.is_valid());
  CHECK(pp.volume() == 0);
  pp.set(1, 1, 2);
  pp.set(1, 2, 1);
  pp.set(2, 1, 1);
  CHECK(pp.is_valid());
  CHECK(pp.volume() == 4);
  CHECK(pp.at(1, 1) == 2);
  CHECK(pp.at(3, 1) == 0);
  CHECK(pp.at(0, 0) == 0);

  pp.set(2, 2, 2);  // exceeds the entry above it
  CHECK_FALSE(pp.is_valid());
}

TEST_CASE("diagonal slices of a 5x5 example") {
  // heights assembled from the slice chain
  //   empty < (1) < (1) < (3) < (4,2) < (5,3,1) > (4,3) > (4,3) > (3,1) > (3) > empty
  int rows[5][5] = {{5, 4, 4, 3, 3},
                    {4, 3, 3, 3, 1},
                    {3, 2, 1, 0, 0},
                    {1, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0}};
  PlanePartition pp(5, 5);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) pp.set(i, j, rows[i - 1][j - 1]);
  REQUIRE(pp.is_valid());
  CHECK(pp.volume() == 41);

  auto slices = hlpp::diagonal_slices(pp);
  CHECK(slices.size() == 9);
  CHECK(slices.at(-4) == Partition{1});
  CHECK(slices.at(-3) == Partition{1});
  CHECK(slices.at(-2) == Partition{3});
  CHECK(slices.at(-1) == Partition{4, 2});
  CHECK(slices.at(0) == Partition{5, 3, 1});
  CHECK(slices.at(1) == Partition{4, 3});
  CHECK(slices.at(2) == Partition{4, 3});
  CHECK(slices.at(3) == Partition{3, 1});
  CHECK(slices.at(4) == Partition{3});

  // ascending to the main diagonal, then descending
  for (int k = -4; k < 0; ++k) CHECK(hlpp::interlaces(slices.at(k + 1), slices.at(k)));
  for (int k = 0; k < 4; ++k) CHECK(hlpp::interlaces(slices.at(k), slices.at(k + 1)));

  CHECK(hlpp::from_slices(slices) == pp);
}

TEST_CASE("from_slices rejects non-interlacing data") {
  std::map<int, Partition> bad;
  bad[0] = Partition{1};
  bad[1] = Partition{2};  // would need la^0 >= 2 in its first part
  CHECK_THROWS_AS(hlpp::from_slices(bad), std::invalid_argument);

  std::map<int, Partition> gap;
  gap[2] = Partition{1};  // nonempty slice away from an empty main diagonal
  CHECK_THROWS_AS(hlpp::from_slices(gap), std::invalid_argument);

  CHECK(hlpp::from_slices({}) == PlanePartition(0, 0));
}

TEST_CASE("slice round trip over a box") {
  for (const auto& pp : plane_partitions_in_box(2, 3, 2)) {
    auto slices = hlpp::diagonal_slices(pp);
    PlanePartition back = hlpp::from_slices(slices);
    // from_slices trims to the minimal bounding base, so compare entrywise
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 3; ++j) CHECK(back.at(i, j) == pp.at(i, j));
    long long v = 0;
    for (const auto& [k, la] : slices) v += la.weight();
    CHECK(v == pp.volume());
  }
}

TEST_CASE("border levels on hand-checked configurations") {
  // single box
  PlanePartition one(1, 1);
  one.set(1, 1, 1);
  CHECK(hlpp::border_levels(one) == std::vector<int>{1});

  // 2x2 block of equal entries: the outer L is one depth-1 border component,
  // the inner corner sits alone at depth 2
  PlanePartition block(2, 2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) block.set(i, j, 1);
  CHECK(hlpp::border_levels(block) == std::vector<int>{1, 2});

  // distinct entries split into components even when touching
  PlanePartition hook(2, 2);
  hook.set(1, 1, 2);
  hook.set(1, 2, 1);
  hook.set(2, 1, 1);
  CHECK(hlpp::border_levels(hook) == std::vector<int>{1, 1, 1});

  // 3x3 block: one L-shaped border component per depth 1, 2, 3
  PlanePartition big(3, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) big.set(i, j, 4);
  CHECK(hlpp::border_levels(big) == std::vector<int>{1, 2, 3});
}

TEST_CASE("border polynomial equals slice polynomial on small examples") {
  const double t = 0.37;
  PlanePartition block(2, 2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) block.set(i, j, 1);
  CHECK(hlpp::border_polynomial(block, t) ==
        doctest::Approx((1 - t) * (1 - t * t)).epsilon(1e-14));
  CHECK(hlpp::slice_polynomial(block, t) ==
        doctest::Approx((1 - t) * (1 - t * t)).epsilon(1e-14));

  PlanePartition hook(2, 2);
  hook.set(1, 1, 2);
  hook.set(1, 2, 1);
  hook.set(2, 1, 1);
  double expect = (1 - t) * (1 - t) * (1 - t);
  CHECK(hlpp::border_polynomial(hook, t) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(hlpp::slice_polynomial(hook, t) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("border polynomial equals slice polynomial exhaustively in a 3x3x3 box") {
  auto all = plane_partitions_in_box(3, 3, 3);
  CHECK(all.size() == 980);  // MacMahon box count
  for (double t : {-0.5, 0.0, 0.3, 0.7, 0.95}) {
    for (const auto& pp : all) {
      double a = hlpp::border_polynomial(pp, t);
      double b = hlpp::slice_polynomial(pp, t);
      CHECK(std::abs(a - b) < 1e-12);
    }
  }
}
