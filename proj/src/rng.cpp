#include "hsad/rng.hpp"

#include <cmath>
#include <numbers>

namespace hsad {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  // Rejection below the largest multiple of bound keeps the draw unbiased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

double SplitMix64::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = next_real();
  while (u1 <= 0.0) u1 = next_real();
  const double u2 = next_real();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t scramble_seed(std::uint64_t x) { return SplitMix64(x).next(); }

}  // namespace hsad
