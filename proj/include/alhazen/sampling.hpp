#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "alhazen/types.hpp"

namespace alhazen::sampling {

/// Deterministic uniform sampler. mt19937_64 is bit-exact across platforms;
/// the double conversion is done by hand because the standard distributions
/// are not portable.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform on the disk of the given radius.
  Complex disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double th = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, th);
  }

  /// The sweep distribution: uniform on the disk of radius 2, excluding an
  /// annulus of width 1e-3 around the unit circle (and the exact origin).
  Complex mixed_point() {
    for (;;) {
      Complex z = disk(2.0);
      const double m = std::abs(z);
      if (std::abs(m - 1.0) < 1e-3 || m == 0.0) continue;
      return z;
    }
  }

  /// Strictly interior point, kept 1e-3 away from the boundary.
  Complex interior_point() { return disk(1.0 - 1e-3); }

  /// Strictly exterior point in the annulus (1 + 1e-3, 2).
  Complex exterior_point() {
    for (;;) {
      Complex z = disk(2.0);
      if (std::abs(z) > 1.0 + 1e-3) return z;
    }
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace alhazen::sampling
