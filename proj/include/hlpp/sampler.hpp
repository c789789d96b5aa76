#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "hlpp/fenwick.hpp"
#include "hlpp/plane_partition.hpp"
#include "hlpp/rng.hpp"

namespace hlpp {

struct GlauberParams {
  int n = 8;  // box side: base n x n, heights capped at n
  double r = 0.5;
  double t = 0.0;
  uint64_t seed = 0;
  uint64_t stream = 0;
  void validate() const;
};

// Single-site heat-bath dynamics on plane partitions confined to an n^3 box,
// reversible with respect to the measure proportional to r^|pi| A_pi(t).
//
// An elementary iteration targets one of the n^3 cube slots uniformly; only
// slots directly above a column top (addable) or at a column top (removable)
// can change the state, so inactive iterations are skipped in closed form
// with a geometric draw.  One "block" is such a skip plus one active update
// and consumes exactly three rng draws.  Runs advance through whole blocks
// until the iteration budget is met, which keeps every stopping point a
// block boundary: the triple (heights, iter, rng counter) then determines
// the entire remaining trajectory, and a resumed run is bit-identical to an
// uninterrupted one.
class GlauberChain {
 public:
  explicit GlauberChain(const GlauberParams& p);

  const GlauberParams& params() const { return params_; }
  unsigned long long iter() const { return iter_; }
  uint64_t rng_counter() const { return rng_.counter(); }
  const PlanePartition& heights() const { return pp_; }
  long long volume() const { return volume_; }

  // adopt a saved state; heights must fit the box
  void restore(const PlanePartition& heights, unsigned long long iter, uint64_t rng_counter);

  int addable_count() const { return add_set_.total(); }
  int removable_count() const { return rem_set_.total(); }
  // column (x, y) of the k-th addable / removable column in code order
  std::pair<int, int> addable_at(int k) const;
  std::pair<int, int> removable_at(int k) const;
  bool is_addable(int x, int y) const;
  bool is_removable(int x, int y) const;

  // heat-bath probability that the targeted cube ends up present; for
  // `adding` the slot above the column top of (x, y), otherwise the top
  // cube itself.  The column must be addable resp. removable.
  double flip_probability(int x, int y, bool adding) const;

  struct BlockHooks {
    // after the skip draw, before the active update; the state is still the
    // one the chain occupied for `skips` iterations
    std::function<void(unsigned long long iter_before, unsigned long long skips)> before_move;
    // after the active update; `changed` reports whether a cube was flipped
    std::function<void(unsigned long long iter_after, bool changed)> after_move;
  };

  // advance through whole blocks until iter() >= target
  void run(unsigned long long target);
  void run(unsigned long long target, const BlockHooks& hooks);
  // advance exactly `blocks` active updates regardless of iteration count
  void run_blocks(unsigned long long blocks);

  // recompute every derived structure from the heights and compare with the
  // incrementally maintained ones; used by long-run integrity tests
  bool audit() const;

 private:
  void rebuild();
  void refresh_column(int x, int y);
  void apply_move(int x, int y, int delta);
  unsigned long long do_block(const BlockHooks* hooks);
  int mult(int d, int c) const;  // multiplicity of part c in diagonal slice d
  double pair_weight(int m, int nn) const;

  GlauberParams params_;
  PlanePartition pp_;
  Philox rng_;
  unsigned long long iter_ = 0;
  long long volume_ = 0;

  // multiplicity table for the 2n-1 diagonal slices, parts 1..n
  std::vector<int> mult_;
  std::vector<double> tpow_;  // t^m for m = 0..n+1
  std::vector<char> is_add_, is_rem_;
  Fenwick add_set_, rem_set_;
};

}  // namespace hlpp
