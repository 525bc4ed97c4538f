#pragma once
#include <cstdint>

#include "scissors/exact/poly.hpp"

namespace scissors {

// Counter-based SplitMix64: draw i of stream s under seed k is
//   mix(k + GOLDEN * (s * 2^32 + i + 1))   (mod 2^64)
// so any case can be regenerated from (seed, stream) alone. See docs/rng.md.
class Rng {
 public:
  static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  Rng(uint64_t seed, uint64_t stream = 0) : seed_(seed), stream_(stream) {}

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t next() {
    ++counter_;
    return mix(seed_ + kGolden * ((stream_ << 32) + counter_));
  }

  // uniform in [lo, hi], rejection sampling on the top of the range
  int64_t uniform(int64_t lo, int64_t hi) {
    uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<int64_t>(next());
    uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    uint64_t x;
    do x = next();
    while (x >= limit);
    return lo + static_cast<int64_t>(x % range);
  }

  // p/q with numerator in [-num, num] and denominator in [1, den]
  exact::Rational rational(int64_t num, int64_t den) {
    int64_t p = uniform(-num, num);
    int64_t q = uniform(1, den);
    exact::Rational r(static_cast<long>(p), static_cast<long>(q));
    r.canonicalize();
    return r;
  }

  uint64_t counter() const { return counter_; }

 private:
  uint64_t seed_;
  uint64_t stream_;
  uint64_t counter_ = 0;
};

}  // namespace scissors
