#pragma once

#include <utility>
#include <vector>

#include "alhazen/numerics.hpp"
#include "alhazen/reflect.hpp"
#include "alhazen/types.hpp"

namespace alhazen::classify {

enum class RootPattern {
  FourSimple,           ///< four simple unimodular roots
  TwoSimpleTwoOff,      ///< two simple unimodular, two off the circle
  DoublePlusTwoSimple,  ///< one double + two simple, all unimodular
  TriplePlusSimple,     ///< one triple + one simple, both unimodular
  Cubic,                ///< a focus at the origin: degree drops to 3
  Degenerate,           ///< anything else (should not occur)
};

enum class Prediction { Four, Two, Indeterminate };

/// Census of the reflection quartic's roots for one pair of foci, plus the
/// coefficient ratio |z1+z2| / |z1 z2| that predicts the unimodular count:
/// ratio < 1 forces four simple unimodular roots, ratio > 2 forces exactly
/// two; in between the count is not determined by the ratio alone.
struct RootProfile {
  int count_unimodular = 0;  ///< with multiplicity
  RootPattern pattern = RootPattern::Degenerate;
  double ratio_lo = 0.0;     ///< |z1+z2| / |z1 z2|; +inf when a focus is 0
  Prediction prediction = Prediction::Indeterminate;
  numerics::RootSet roots;
};

RootProfile profile_roots(Complex z1, Complex z2, const Tolerances& tol = {});

enum class LocusBranch { Real, Conjugate };

/// Focus pairs whose quartic is a multiple of (u-1)^3 (u+1). Real branch:
/// z1 = param, z2 = param/(2 param - 1) for param in (-1, sqrt(2)-1), param
/// nonzero. Conjugate branch: z1 = 1/2 + e^{i param}/2 on the circle
/// |z - 1/2| = 1/2 (z1 not 0 or 1), z2 = conj(z1).
std::pair<Complex, Complex> triple_root_locus(LocusBranch branch, double param);

/// Self-inversive criterion for all roots unimodular: true iff every root of
/// the derivative lies in the closed unit disk (within unimodular_eps).
/// Requires the quartic nondegenerate (degree 4).
bool cohn_test(const reflect::AlhazenQuartic& q, const Tolerances& tol = {});

struct SharpnessPoint {
  double t = 0.0;
  double ratio = 0.0;  ///< |z1+z2| / |z1 z2| = 2 cos(t/2) / (1+t)
  int count = 0;       ///< observed unimodular root count
};

/// Witness family z1 = (1+t), z2 = (1+t) e^{it} showing the ratio bound 2 is
/// sharp: the ratio tends to 2 from below while the count stays 4.
/// Every t must be positive.
std::vector<SharpnessPoint> sharpness_scan(const std::vector<double>& ts,
                                           const Tolerances& tol = {});

}  // namespace alhazen::classify
