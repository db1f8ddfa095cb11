#pragma once

#include <cmath>
#include <cstdint>

namespace qtda {

// SplitMix64 finalizer (Steele, Lea & Flood; public-domain constants).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Counter-based 64-bit generator: state walks the golden-ratio sequence and
// each output is mix64 of the new state. The algorithm is fixed so that any
// implementation, in any language, reproduces the same stream from a seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return mix64(state_ += 0x9E3779B97F4A7C15ull); }

  // Uniform double in [0, 1), top 53 bits of the draw.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Pareto with shape alpha and scale 1 (support [1, inf)) by inversion:
  // x = (1 - u)^(-1/alpha) with u in [0, 1).
  double pareto(double alpha) {
    return std::pow(1.0 - next_double(), -1.0 / alpha);
  }

 private:
  std::uint64_t state_;
};

// Deterministic substream seed for labelled work items, e.g. pair (i, j) of a
// distance matrix. Independent of evaluation order by construction.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0) {
  std::uint64_t z = seed;
  z = mix64(z + 0x9E3779B97F4A7C15ull * (a + 1));
  z = mix64(z + 0x9E3779B97F4A7C15ull * (b + 1));
  return z;
}

}  // namespace qtda
