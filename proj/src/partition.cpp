#include "hlpp/partition.hpp"

#include <cmath>
#include <stdexcept>

namespace hlpp {

void Partition::normalize() {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition part < 0");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

long long Partition::weight() const {
  long long w = 0;
  for (int p : parts) w += p;
  return w;
}

Partition conjugate(const Partition& la) {
  Partition out;
  if (la.empty()) return out;
  out.parts.resize(la.parts[0]);
  // la'_i = #{k : la_k >= i}
  for (int i = 1; i <= la.parts[0]; ++i) {
    int cnt = 0;
    for (int p : la.parts) {
      if (p >= i)
        ++cnt;
      else
        break;
    }
    out.parts[i - 1] = cnt;
  }
  return out;
}

int multiplicity(const Partition& la, int c) {
  if (c < 1) throw std::invalid_argument("multiplicity needs c >= 1");
  int cnt = 0;
  for (int p : la.parts) {
    if (p == c) ++cnt;
    if (p < c) break;
  }
  return cnt;
}

bool interlaces(const Partition& la, const Partition& mu) {
  int n = std::max(la.length(), mu.length());
  for (int i = 1; i <= n; ++i) {
    if (la.part(i) < mu.part(i)) return false;
    if (mu.part(i) < la.part(i + 1)) return false;
  }
  return true;
}

namespace {

// t^m for small integer m
double t_pow(double t, int m) {
  double v = 1.0;
  for (int i = 0; i < m; ++i) v *= t;
  return v;
}

}  // namespace

double skew_phi(const Partition& la, const Partition& mu, double t) {
  if (!interlaces(la, mu)) return 0.0;
  Partition lac = conjugate(la), muc = conjugate(mu);
  double out = 1.0;
  for (int i = 1; i <= la.part(1); ++i) {
    if (lac.part(i) > muc.part(i) && lac.part(i + 1) == muc.part(i + 1)) {
      int m = lac.part(i) - lac.part(i + 1);  // m_i(la)
      out *= 1.0 - t_pow(t, m);
    }
  }
  return out;
}

double skew_psi(const Partition& la, const Partition& mu, double t) {
  if (!interlaces(la, mu)) return 0.0;
  Partition lac = conjugate(la), muc = conjugate(mu);
  double out = 1.0;
  for (int j = 1; j <= la.part(1); ++j) {
    if (lac.part(j) == muc.part(j) && lac.part(j + 1) > muc.part(j + 1)) {
      int m = muc.part(j) - muc.part(j + 1);  // m_j(mu)
      out *= 1.0 - t_pow(t, m);
    }
  }
  return out;
}

double b_norm(const Partition& la, double t) {
  double out = 1.0;
  int i = 0;
  while (i < la.length()) {
    int j = i;
    while (j < la.length() && la.parts[j] == la.parts[i]) ++j;
    int m = j - i;  // multiplicity of this part size
    double tp = 1.0;
    for (int k = 1; k <= m; ++k) {
      tp *= t;
      out *= 1.0 - tp;
    }
    i = j;
  }
  return out;
}

}  // namespace hlpp
