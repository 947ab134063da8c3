#pragma once

#include <cstdint>
#include <cmath>

#include "gdpm/types.hpp"

namespace gdpm {

/// SplitMix64 (Steele, Lea, Flood): each output is a bijective mix of
/// seed + i*GAMMA, i.e. a pure function of a 64-bit counter.  All randomness
/// in this library flows through this generator so that problem instances,
/// initial points and traces are reproducible bit-for-bit from a seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double gaussian() {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Vector gaussian_vector(Index n) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  Vector uniform_vector(Index n, double lo, double hi) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = uniform(lo, hi);
    return v;
  }

  /// Independent substream for a tagged purpose of the same user seed.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t tag) {
    SplitMix64 g(seed ^ ((tag + 1) * 0x9E3779B97F4A7C15ull));
    g.next_u64();
    return g;
  }

 private:
  std::uint64_t state_;
};

}  // namespace gdpm
