#include "hlpp/rng.hpp"

#include <cmath>

namespace hlpp {

namespace {

constexpr uint32_t kMul0 = 0xD2511F53u;
constexpr uint32_t kMul1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

}  // namespace

Philox::Philox(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {
  key_ = {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)};
}

std::array<uint32_t, 4> Philox::block(const std::array<uint32_t, 4>& counter,
                                      const std::array<uint32_t, 2>& key) {
  uint32_t x0 = counter[0], x1 = counter[1], x2 = counter[2], x3 = counter[3];
  uint32_t k0 = key[0], k1 = key[1];
  for (int round = 0; round < 10; ++round) {
    uint64_t p0 = static_cast<uint64_t>(kMul0) * x0;
    uint64_t p1 = static_cast<uint64_t>(kMul1) * x2;
    uint32_t y0 = static_cast<uint32_t>(p1 >> 32) ^ x1 ^ k0;
    uint32_t y1 = static_cast<uint32_t>(p1);
    uint32_t y2 = static_cast<uint32_t>(p0 >> 32) ^ x3 ^ k1;
    uint32_t y3 = static_cast<uint32_t>(p0);
    x0 = y0;
    x1 = y1;
    x2 = y2;
    x3 = y3;
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return {x0, x1, x2, x3};
}

double Philox::uniform01() {
  std::array<uint32_t, 4> c{static_cast<uint32_t>(counter_), static_cast<uint32_t>(counter_ >> 32),
                            static_cast<uint32_t>(stream_), static_cast<uint32_t>(stream_ >> 32)};
  auto b = block(c, key_);
  ++counter_;
  uint64_t bits = (static_cast<uint64_t>(b[1]) << 32) | b[0];
  // (0,1) strictly: half-offset of the top 53 bits
  return static_cast<double>((bits >> 11) + 0.5) * 0x1p-53;
}

uint64_t Philox::uniform_below(uint64_t n) {
  return static_cast<uint64_t>(static_cast<double>(n) * uniform01());
}

uint64_t Philox::geometric_skips(double x) {
  double u = uniform01();
  if (!(x > 0.0)) return 0;
  return static_cast<uint64_t>(std::floor(std::log(u) / std::log(x)));
}

}  // namespace hlpp
