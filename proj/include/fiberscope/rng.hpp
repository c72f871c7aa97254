#pragma once

#include <cmath>
#include <cstdint>

#include "fiberscope/types.hpp"

namespace fiberscope {

/// splitmix64 stream. Deterministic across platforms and cheap to seed per
/// work item, so parallel sweeps draw identical samples regardless of the
/// thread count.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }  // [0,1)
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  Complex annulus(double rmin, double rmax) {
    const double r = uniform(rmin, rmax);
    const double t = uniform(0.0, 2.0 * kPi);
    return Complex(r * std::cos(t), r * std::sin(t));
  }

  Complex box(double re_half, double im_half) {
    return Complex(uniform(-re_half, re_half), uniform(-im_half, im_half));
  }

 private:
  uint64_t state_;
};

inline uint64_t mix64(uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdull;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ull;
  x ^= x >> 33;
  return x;
}

/// Independent substream `item` of a seeded run.
inline Rng sub_rng(uint64_t seed, uint64_t item) {
  return Rng(mix64(seed ^ mix64(item + 0x9e3779b97f4a7c15ull)));
}

inline Rng sub_rng(uint64_t seed, uint64_t a, uint64_t b) {
  return Rng(mix64(mix64(seed ^ mix64(a + 0x9e3779b97f4a7c15ull)) + b));
}

}  // namespace fiberscope
