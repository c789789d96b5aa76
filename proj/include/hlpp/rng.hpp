#pragma once

#include <array>
#include <cstdint>

namespace hlpp {

// Philox 4x32-10 counter-based generator.  Every draw consumes exactly one
// 128-bit block addressed by (counter, stream), so a saved counter value is
// enough to reproduce or fast-forward any trajectory.
class Philox {
 public:
  Philox() = default;
  explicit Philox(uint64_t seed, uint64_t stream = 0);

  // the bare block function: 10 rounds over a 128-bit counter, 64-bit key
  static std::array<uint32_t, 4> block(const std::array<uint32_t, 4>& counter,
                                       const std::array<uint32_t, 2>& key);

  // uniform on the open interval (0,1), 53 significant bits
  double uniform01();
  // uniform integer in [0, n), computed as floor(n * uniform01())
  uint64_t uniform_below(uint64_t n);
  // number of consecutive skipped trials when each trial proceeds with
  // probability 1 - x: floor(log U / log x); always consumes one draw
  uint64_t geometric_skips(double x);

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }
  uint64_t counter() const { return counter_; }
  void set_counter(uint64_t c) { counter_ = c; }

 private:
  uint64_t seed_ = 0;
  uint64_t stream_ = 0;
  uint64_t counter_ = 0;
  std::array<uint32_t, 2> key_{0, 0};
};

}  // namespace hlpp
