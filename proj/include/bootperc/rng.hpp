#pragma once

#include <cstdint>

namespace bootperc {

// Reproducibility contract for every randomized routine in this project.
//
// All randomness is derived from a 64-bit master seed through the splitmix64
// finalizer below. No std:: distribution or engine is used anywhere, because
// their outputs are implementation-defined; with the mixers in this header a
// given (seed, trial, vertex) triple produces the same bits on every build.
//
// The per-vertex inclusion draw is a pure function of (seed, trial, vertex).
// This gives two properties the estimators rely on:
//   * trials can be split across any number of workers in any order, and
//   * for a fixed (seed, trial) the initially infected set is monotone in p
//     (vertex v is included iff u(v) < p, with u(v) independent of p),
// so scans over a p-grid are coupled and per-trial outcomes are step
// functions of p.

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform in [0,1) with 53 random bits, keyed by (seed, trial, vertex).
inline double vertex_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t vertex) {
  std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ull * (trial + 1));
  h = mix64(h ^ (0xD2B74407B1CE6E93ull * (vertex + 1)));
  return double(h >> 11) * 0x1.0p-53;
}

// Sequential splitmix64 stream for shuffles and auxiliary sampling.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix64(seed + 0x9E3779B97F4A7C15ull * (stream + 1))) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  double next_uniform() { return double(next() >> 11) * 0x1.0p-53; }

  // Unbiased bounded draw in [0, bound) by rejection on the low product half.
  std::uint64_t next_below(std::uint64_t bound) {
    for (;;) {
      std::uint64_t x = next();
      __uint128_t m = (__uint128_t)x * bound;
      std::uint64_t lo = (std::uint64_t)m;
      if (lo >= bound || lo >= (0 - bound) % bound) return (std::uint64_t)(m >> 64);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace bootperc
