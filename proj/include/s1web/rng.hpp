#pragma once

#include <complex>
#include <cstdint>

namespace s1web {

/// splitmix64: tiny, portable, and identical across platforms, so seeded
/// sweeps are reproducible byte for byte.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  std::complex<double> box(double re_lo, double re_hi, double im_lo, double im_hi) {
    double re = uniform(re_lo, re_hi);
    double im = uniform(im_lo, im_hi);
    return {re, im};
  }

 private:
  uint64_t state_;
};

}  // namespace s1web
