#include "hlpp/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace hlpp {

void GlauberParams::validate() const {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("need 0 < r < 1");
  if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("need 0 <= t < 1");
}

GlauberChain::GlauberChain(const GlauberParams& p)
    : params_(p),
      pp_(p.n, p.n),
      rng_(p.seed, p.stream),
      add_set_(p.n * p.n),
      rem_set_(p.n * p.n) {
  params_.validate();
  tpow_.resize(p.n + 2);
  tpow_[0] = 1.0;
  for (size_t m = 1; m < tpow_.size(); ++m) tpow_[m] = tpow_[m - 1] * p.t;
  rebuild();
}

void GlauberChain::restore(const PlanePartition& heights, unsigned long long iter,
                           uint64_t rng_counter) {
  const int n = params_.n;
  if (heights.rows > n || heights.cols > n)
    throw std::invalid_argument("saved heights exceed the box base");
  if (!heights.is_valid()) throw std::invalid_argument("saved heights are not a plane partition");
  PlanePartition padded(n, n);
  for (int x = 1; x <= heights.rows; ++x)
    for (int y = 1; y <= heights.cols; ++y) {
      int v = heights.at(x, y);
      if (v > n) throw std::invalid_argument("saved heights exceed the box height");
      padded.set(x, y, v);
    }
  pp_ = std::move(padded);
  iter_ = iter;
  rng_.set_counter(rng_counter);
  rebuild();
}

// multiplicity of part size c in the slice along x - y = d
int GlauberChain::mult(int d, int c) const {
  if (c == 0) return -2;  // sentinel: pair weights involving size 0 are neutral
  const int n = params_.n;
  if (d <= -n || d >= n) return 0;
  return mult_[static_cast<size_t>(d + n - 1) * (n + 1) + c];
}

// contribution of adjacent slices holding m and nn parts of one size
double GlauberChain::pair_weight(int m, int nn) const {
  if (m < 0 || nn < 0) return 1.0;
  return m > nn ? 1.0 - tpow_[m] : 1.0;
}

bool GlauberChain::is_addable(int x, int y) const {
  const int n = params_.n;
  int h = pp_.at(x, y);
  if (h >= n) return false;
  if (x > 1 && pp_.at(x - 1, y) < h + 1) return false;
  if (y > 1 && pp_.at(x, y - 1) < h + 1) return false;
  return true;
}

bool GlauberChain::is_removable(int x, int y) const {
  const int n = params_.n;
  int h = pp_.at(x, y);
  if (h < 1) return false;
  if (x < n && pp_.at(x + 1, y) > h - 1) return false;
  if (y < n && pp_.at(x, y + 1) > h - 1) return false;
  return true;
}

void GlauberChain::rebuild() {
  const int n = params_.n;
  mult_.assign(static_cast<size_t>(2 * n - 1) * (n + 1), 0);
  volume_ = pp_.volume();
  for (int d = -(n - 1); d <= n - 1; ++d) {
    int x = d >= 0 ? 1 + d : 1, y = d >= 0 ? 1 : 1 - d;
    for (; x <= n && y <= n; ++x, ++y) {
      int h = pp_.at(x, y);
      if (h >= 1) ++mult_[static_cast<size_t>(d + n - 1) * (n + 1) + h];
    }
  }
  is_add_.assign(static_cast<size_t>(n) * n, 0);
  is_rem_.assign(static_cast<size_t>(n) * n, 0);
  add_set_ = Fenwick(n * n);
  rem_set_ = Fenwick(n * n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      int code = (x - 1) * n + (y - 1);
      if (is_addable(x, y)) {
        is_add_[code] = 1;
        add_set_.add(code, 1);
      }
      if (is_removable(x, y)) {
        is_rem_[code] = 1;
        rem_set_.add(code, 1);
      }
    }
}

void GlauberChain::refresh_column(int x, int y) {
  const int n = params_.n;
  if (x < 1 || y < 1 || x > n || y > n) return;
  int code = (x - 1) * n + (y - 1);
  char a = is_addable(x, y) ? 1 : 0;
  if (a != is_add_[code]) {
    add_set_.add(code, a - is_add_[code]);
    is_add_[code] = a;
  }
  char rm = is_removable(x, y) ? 1 : 0;
  if (rm != is_rem_[code]) {
    rem_set_.add(code, rm - is_rem_[code]);
    is_rem_[code] = rm;
  }
}

std::pair<int, int> GlauberChain::addable_at(int k) const {
  int code = add_set_.kth(k);
  return {code / params_.n + 1, code % params_.n + 1};
}

std::pair<int, int> GlauberChain::removable_at(int k) const {
  int code = rem_set_.kth(k);
  return {code / params_.n + 1, code % params_.n + 1};
}

double GlauberChain::flip_probability(int x, int y, bool adding) const {
  const double r = params_.r;
  int d = x - y;
  int h = pp_.at(x, y);
  if (adding) {
    if (!is_addable(x, y)) throw std::invalid_argument("column is not addable");
    int z = h + 1;
    double w1 = r * pair_weight(mult(d - 1, z), mult(d, z) + 1) *
                pair_weight(mult(d - 1, z - 1), mult(d, z - 1) - 1) *
                pair_weight(mult(d, z) + 1, mult(d + 1, z)) *
                pair_weight(mult(d, z - 1) - 1, mult(d + 1, z - 1));
    double w2 = pair_weight(mult(d - 1, z), mult(d, z)) *
                pair_weight(mult(d - 1, z - 1), mult(d, z - 1)) *
                pair_weight(mult(d, z), mult(d + 1, z)) *
                pair_weight(mult(d, z - 1), mult(d + 1, z - 1));
    return w1 / (w1 + w2);  // w1 carries the added cube
  }
  if (!is_removable(x, y)) throw std::invalid_argument("column is not removable");
  int z = h;
  double w1 = pair_weight(mult(d - 1, z), mult(d, z) - 1) *
              pair_weight(mult(d - 1, z - 1), mult(d, z - 1) + 1) *
              pair_weight(mult(d, z) - 1, mult(d + 1, z)) *
              pair_weight(mult(d, z - 1) + 1, mult(d + 1, z - 1));
  double w2 = r * pair_weight(mult(d - 1, z), mult(d, z)) *
              pair_weight(mult(d - 1, z - 1), mult(d, z - 1)) *
              pair_weight(mult(d, z), mult(d + 1, z)) *
              pair_weight(mult(d, z - 1), mult(d + 1, z - 1));
  return w2 / (w1 + w2);  // w2 keeps the cube in place
}

void GlauberChain::apply_move(int x, int y, int delta) {
  const int n = params_.n;
  int h = pp_.at(x, y);
  int d = x - y;
  size_t row = static_cast<size_t>(d + n - 1) * (n + 1);
  if (delta > 0) {
    if (h >= 1) --mult_[row + h];
    ++mult_[row + h + 1];
  } else {
    --mult_[row + h];
    if (h >= 2) ++mult_[row + h - 1];
  }
  pp_.set(x, y, h + delta);
  volume_ += delta;
  refresh_column(x, y);
  refresh_column(x - 1, y);
  refresh_column(x + 1, y);
  refresh_column(x, y - 1);
  refresh_column(x, y + 1);
}

// one geometric skip plus one active update; returns iterations consumed
unsigned long long GlauberChain::do_block(const BlockHooks* hooks) {
  const int n = params_.n;
  const double slots = static_cast<double>(n) * n * n;
  int add = add_set_.total(), rem = rem_set_.total();
  double x_pi = 1.0 - (add + rem) / slots;
  unsigned long long skips = rng_.geometric_skips(x_pi);
  if (hooks && hooks->before_move) hooks->before_move(iter_, skips);

  uint64_t u = rng_.uniform_below(static_cast<uint64_t>(add + rem));
  double v = rng_.uniform01();
  bool changed = false;
  if (u < static_cast<uint64_t>(add)) {
    auto [x, y] = addable_at(static_cast<int>(u));
    if (v < flip_probability(x, y, true)) {
      apply_move(x, y, +1);
      changed = true;
    }
  } else {
    auto [x, y] = removable_at(static_cast<int>(u - add));
    if (v < 1.0 - flip_probability(x, y, false)) {
      apply_move(x, y, -1);
      changed = true;
    }
  }
  iter_ += skips + 1;
  if (hooks && hooks->after_move) hooks->after_move(iter_, changed);
  return skips + 1;
}

void GlauberChain::run(unsigned long long target) {
  while (iter_ < target) do_block(nullptr);
}

void GlauberChain::run(unsigned long long target, const BlockHooks& hooks) {
  while (iter_ < target) do_block(&hooks);
}

void GlauberChain::run_blocks(unsigned long long blocks) {
  for (unsigned long long b = 0; b < blocks; ++b) do_block(nullptr);
}

bool GlauberChain::audit() const {
  GlauberChain fresh(params_);
  fresh.restore(pp_, iter_, rng_.counter());
  if (fresh.mult_ != mult_) return false;
  if (fresh.is_add_ != is_add_ || fresh.is_rem_ != is_rem_) return false;
  if (fresh.add_set_.total() != add_set_.total()) return false;
  if (fresh.rem_set_.total() != rem_set_.total()) return false;
  if (fresh.volume_ != volume_) return false;
  for (int k = 0; k < add_set_.total(); ++k)
    if (fresh.add_set_.kth(k) != add_set_.kth(k)) return false;
  for (int k = 0; k < rem_set_.total(); ++k)
    if (fresh.rem_set_.kth(k) != rem_set_.kth(k)) return false;
  return true;
}

}  // namespace hlpp
