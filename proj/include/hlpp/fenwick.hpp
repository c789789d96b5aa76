#pragma once

#include <vector>

namespace hlpp {

// Fenwick tree over a fixed range of integer codes, used here as an ordered
// 0/1 membership set: point updates, total count, and k-th member selection
// are all O(log size).  Selection by code order is what makes sampler
// trajectories a pure function of (state, rng counter), independent of the
// history of insertions.
class Fenwick {
 public:
  explicit Fenwick(int size) : size_(size), tree_(size + 1, 0) {}

  void add(int i, int delta) {
    total_ += delta;
    for (++i; i <= size_; i += i & -i) tree_[i] += delta;
  }

  int total() const { return total_; }

  // code of the (k+1)-th smallest member, 0-based k < total()
  int kth(int k) const {
    int pos = 0;
    int pw = 1;
    while (2 * pw <= size_) pw *= 2;
    for (; pw > 0; pw /= 2) {
      if (pos + pw <= size_ && tree_[pos + pw] <= k) {
        pos += pw;
        k -= tree_[pos];
      }
    }
    return pos;  // prefix sum through `pos` is <= k, so member index = pos
  }

 private:
  int size_;
  int total_ = 0;
  std::vector<int> tree_;
};

}  // namespace hlpp
