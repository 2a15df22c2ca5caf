#pragma once

#include <cmath>
#include <numbers>

#include "alhazen/types.hpp"

namespace alhazen::detail {

/// Rigid normalization of a pair of nonzero points: a rotation followed by an
/// optional conjugation taking z1 to modulus*e^{-i alpha} and z2 to
/// modulus*e^{+i alpha} with alpha in [0, pi/2]. Both maps commute with the
/// reflection problem, so root sets transport through the frame verbatim.
struct Frame {
  double rotation = 0.0;   ///< applied first: w -> e^{i rotation} w
  bool conjugated = false; ///< applied second
  double alpha = 0.0;      ///< half the angular gap between the rays
};

/// Reduce an angle to (-pi, pi].
inline double principal_angle(double a) {
  a = std::remainder(a, 2.0 * std::numbers::pi);
  if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
  return a;
}

inline Frame normalize_pair(Complex z1, Complex z2) {
  const double t1 = std::arg(z1);
  const double delta = principal_angle(std::arg(z2) - t1);
  Frame f;
  f.rotation = -t1 - delta / 2.0;
  f.conjugated = delta < 0.0;
  f.alpha = std::abs(delta) / 2.0;
  return f;
}

inline Complex to_frame(const Frame& f, Complex w) {
  Complex v = std::polar(1.0, f.rotation) * w;
  return f.conjugated ? std::conj(v) : v;
}

inline Complex from_frame(const Frame& f, Complex v) {
  if (f.conjugated) v = std::conj(v);
  return std::polar(1.0, -f.rotation) * v;
}

}  // namespace alhazen::detail
