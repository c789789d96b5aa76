#include "hlpp/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hlpp/partition.hpp"

namespace hlpp {

void HLParams::validate() const {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("need 0 < r < 1");
  if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("need 0 <= t < 1");
}

double hl_weight(const PlanePartition& pp, const HLParams& p) {
  p.validate();
  return std::pow(p.r, static_cast<double>(pp.volume())) * border_polynomial(pp, p.t);
}

double partition_function(const HLParams& p) {
  p.validate();
  double acc = 0.0;
  for (int n = 1; n < 2000000; ++n) {
    double rn = std::pow(p.r, n);
    double term = n * (std::log1p(-p.t * rn) - std::log1p(-rn));
    acc += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) break;
  }
  return std::exp(acc);
}

double partition_function_box(int N, const HLParams& p) {
  p.validate();
  if (N < 0) throw std::invalid_argument("need N >= 0");
  double acc = 0.0;
  for (int n = 1; n <= 2 * N - 1; ++n) {
    int mult = N - std::abs(n - N);  // #{(i,j) in [N]^2 : i+j-1 = n}
    double rn = std::pow(p.r, n);
    acc += mult * (std::log1p(-p.t * rn) - std::log1p(-rn));
  }
  return std::exp(acc);
}

double box_count(int rows, int cols, int hmax) {
  double out = 1.0;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      for (int k = 1; k <= hmax; ++k) out *= static_cast<double>(i + j + k - 1) / (i + j + k - 2);
  return out;
}

void enumerate_box(int rows, int cols, int hmax,
                   const std::function<void(const PlanePartition&)>& visit) {
  PlanePartition pp(rows, cols);
  std::function<void(int)> rec = [&](int cell) {
    if (cell == rows * cols) {
      visit(pp);
      return;
    }
    int i = cell / cols + 1, j = cell % cols + 1;
    int up = (i > 1) ? pp.at(i - 1, j) : hmax;
    int left = (j > 1) ? pp.at(i, j - 1) : hmax;
    int cap = std::min(up, left);
    for (int v = 0; v <= cap; ++v) {
      pp.set(i, j, v);
      rec(cell + 1);
    }
    pp.set(i, j, 0);
  };
  rec(0);
}

void SliceMeasure::validate() const {
  if (N < 1) throw std::invalid_argument("need N >= 1");
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("need 0 < a < 1");
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("need 0 <= r < 1");
  if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("need 0 <= t < 1");
}

namespace {

std::vector<double> alphabet(const SliceMeasure& m) {
  std::vector<double> x(m.N);
  double v = m.a;
  for (int i = 0; i < m.N; ++i, v *= m.r) x[i] = v;
  return x;
}

// all la interlacing above mu (la > mu) with la_1 <= pmax
void for_each_extension(const Partition& mu, int pmax,
                        const std::function<void(const Partition&)>& visit) {
  int L = mu.length();
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == L + 2) {
      visit(Partition(cur));
      return;
    }
    int lo = mu.part(i);
    int hi = (i == 1) ? pmax : mu.part(i - 1);
    for (int v = lo; v <= hi; ++v) {
      cur.push_back(v);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

using Table = std::map<Partition, double>;

Table branch_table(const SliceMeasure& m, int pmax, bool use_phi) {
  m.validate();
  if (pmax < 0) throw std::invalid_argument("need pmax >= 0");
  Table cur;
  cur[Partition{}] = 1.0;
  for (double xk : alphabet(m)) {
    Table next;
    for (const auto& [mu, val] : cur) {
      for_each_extension(mu, pmax, [&](const Partition& la) {
        double fac = use_phi ? skew_phi(la, mu, m.t) : skew_psi(la, mu, m.t);
        if (fac == 0.0) return;
        next[la] += val * fac * std::pow(xk, static_cast<double>(la.weight() - mu.weight()));
      });
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

double cauchy_product(const SliceMeasure& m) {
  m.validate();
  auto x = alphabet(m);
  double acc = 0.0;
  for (double xi : x)
    for (double yj : x) acc += std::log1p(-m.t * xi * yj) - std::log1p(-xi * yj);
  return std::exp(acc);
}

std::map<Partition, double> hl_p_table(const SliceMeasure& m, int pmax) {
  return branch_table(m, pmax, false);
}

std::map<Partition, double> hl_q_table(const SliceMeasure& m, int pmax) {
  return branch_table(m, pmax, true);
}

std::complex<double> exact_expectation(
    const SliceMeasure& m, const std::function<std::complex<double>(const Partition&)>& f,
    int pmax, double tol) {
  m.validate();
  if (pmax < 4) throw std::invalid_argument("need pmax >= 4");
  auto P = hl_p_table(m, pmax);
  double Pi = cauchy_product(m);

  // accumulate the truncated sum and per-shell masses, shells indexed by la_1
  std::vector<double> shell_mass(pmax + 1, 0.0), shell_fmass(pmax + 1, 0.0);
  std::complex<double> acc = 0.0;
  for (const auto& [la, pval] : P) {
    double w = b_norm(la, m.t) * pval * pval;  // P_la(X) Q_la(X) with Q = b P
    std::complex<double> fv = f(la);
    acc += w * fv;
    shell_mass[la.part(1)] += w;
    shell_fmass[la.part(1)] += w * std::abs(fv);
  }

  // certify the discarded shells by a geometric bound read off the last ratios
  auto tail_bound = [&](const std::vector<double>& s) {
    if (s[pmax] == 0.0) return 0.0;
    double rho = 0.0;
    for (int p = pmax - 2; p <= pmax; ++p) {
      if (s[p - 1] <= 0.0) throw std::runtime_error("shell decay not geometric");
      rho = std::max(rho, s[p] / s[p - 1]);
    }
    if (!(rho < 0.9)) throw std::runtime_error("shell masses decay too slowly; increase pmax");
    return s[pmax] * rho / (1.0 - rho);
  };
  double err = (tail_bound(shell_mass) + tail_bound(shell_fmass)) / Pi;
  if (!(err <= tol))
    throw std::runtime_error("expectation tail estimate exceeds tolerance; increase pmax");
  return acc / Pi;
}

}  // namespace hlpp
