#pragma once

#include <cstdint>

namespace hsad {

// Deterministic 64-bit generator (splitmix64). All randomness in the library
// flows through this so that a given seed reproduces bit-identical streams on
// every platform; std::mt19937_64 distributions are not portable across
// standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, bound) via rejection. bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double next_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal deviate (Box-Muller, second value cached).
  double next_gaussian();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// One splitmix64 scrambling step: the output of a fresh SplitMix64(x).next().
std::uint64_t scramble_seed(std::uint64_t x);

}  // namespace hsad
