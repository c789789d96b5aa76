#pragma once
// Integer partitions and the one-row branching weights of Hall-Littlewood
// polynomials (Macdonald P/Q at q = 0). Conventions follow Macdonald's book:
// a partition is a weakly decreasing list of positive integers, lambda'
// denotes the conjugate and m_c(lambda) the number of parts equal to c.

#include <compare>
#include <initializer_list>
#include <vector>

namespace hlpp {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, strictly positive

  Partition() = default;
  Partition(std::initializer_list<int> v) : parts(v) { normalize(); }
  explicit Partition(std::vector<int> v) : parts(std::move(v)) { normalize(); }

  int length() const { return static_cast<int>(parts.size()); }
  long long weight() const;  // |lambda|
  bool empty() const { return parts.empty(); }

  // 1-based access; parts beyond the length read as 0
  int part(int i) const { return (i >= 1 && i <= length()) ? parts[i - 1] : 0; }

  // drops trailing zeros; throws std::invalid_argument if not weakly
  // decreasing or if a part is negative
  void normalize();

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts <=> b.parts;
  }
};

Partition conjugate(const Partition& la);

// m_c(lambda) for c >= 1
int multiplicity(const Partition& la, int c);

// la >= mu in the interlacing sense: la_1 >= mu_1 >= la_2 >= mu_2 >= ...
// equivalently la/mu is a horizontal strip
bool interlaces(const Partition& la, const Partition& mu);

// Branching weights of the Hall-Littlewood symmetric functions in a single
// variable:  Q_{la/mu}(x; t) = phi_{la/mu}(t) x^{|la|-|mu|}  and
//            P_{la/mu}(x; t) = psi_{la/mu}(t) x^{|la|-|mu|}.
// With la', mu' the conjugates,
//   phi_{la/mu}(t) = prod over columns i >= 1 with la'_i > mu'_i and
//                    la'_{i+1} = mu'_{i+1} of (1 - t^{m_i(la)}),
//   psi_{la/mu}(t) = prod over columns j >= 1 with la'_j = mu'_j and
//                    la'_{j+1} > mu'_{j+1} of (1 - t^{m_j(mu)}).
// Both vanish unless la/mu is a horizontal strip, in which case the index
// sets are the multiset differences S(la)\S(mu) resp. S(mu)\S(la), where
// S(nu) is the multiset of positive part sizes of nu.
double skew_phi(const Partition& la, const Partition& mu, double t);
double skew_psi(const Partition& la, const Partition& mu, double t);

// b_la(t) = prod_{c >= 1} prod_{j=1}^{m_c(la)} (1 - t^j), the ratio Q_la/P_la
double b_norm(const Partition& la, double t);

}  // namespace hlpp
