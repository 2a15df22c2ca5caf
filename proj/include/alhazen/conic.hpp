#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "alhazen/frame.hpp"
#include "alhazen/types.hpp"

namespace alhazen::conic {

enum class ConicKind { LinePair, EquilateralHyperbola };

/// A line (or asymptote) as point + direction, both complex.
struct ConicLine {
  Complex point;
  Complex direction;
};

/// The inversion of the reflection quartic's circle condition: the real
/// conic through 0, 1/conj(z1), 1/conj(z2) and twice its center,
///
///   Im( conj(z1) conj(z2) u^2 - (conj(z1)+conj(z2)) u ) = 0,
///
/// expanded as A x^2 + B xy + C y^2 + D x + E y + F with A + C = 0 in every
/// frame (trace-free): a rectangular hyperbola, or a pair of perpendicular
/// lines exactly when |z1| = |z2| or the foci are collinear with the origin.
struct ConicModel {
  Complex z1, z2;
  double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;
  Complex center;
  ConicKind kind = ConicKind::EquilateralHyperbola;
  /// The two lines (LinePair) or the two asymptotes (hyperbola); both pass
  /// through the center, the first parallel to the interior bisector of the
  /// angle between the rays through z1 and z2, the second perpendicular.
  std::array<ConicLine, 2> lines;
  /// Distances from the origin to the two lines, populated for LinePair.
  std::optional<std::pair<double, double>> line_distances;
  /// Center-to-vertex distance along the transverse axis, hyperbola only.
  std::optional<double> vertex_distance;
  detail::Frame normalization;  ///< map into the arg z2 = -arg z1 = alpha frame
  double alpha = 0.0;           ///< half angular gap, in [0, pi/2]
  bool ill_conditioned = false; ///< hyperbola within 1e-6 of degenerating
};

/// Throws DomainError when z1 z2 = 0 (the conic degenerates to a line).
ConicModel build_conic(Complex z1, Complex z2);

/// Quadratic form value at a point.
double conic_eval(const ConicModel& m, Complex point);

/// Circumcenter of a nondegenerate triangle via the ratio of two 3x3
/// determinants. Throws DomainError for collinear vertices.
Complex circumcenter(Complex a, Complex b, Complex c);

/// Orthocenter of the triangle (0, 1/conj(z1), 1/conj(z2)); requires the
/// foci not collinear with the origin. Lies on the conic of build_conic.
Complex orthocenter_origin_triangle(Complex z1, Complex z2);

/// Restriction of the conic to the unit circle in the normalized frame:
///   r1 r2 sin 2t - r1 sin(t + alpha) - r2 sin(t - alpha).
double conic_on_circle(double r1, double r2, double alpha, double t);

/// Intersection points of the conic with the unit circle: sign changes of
/// conic_on_circle over its breakpoints plus a 512-point scan, each bracket
/// bisected to 1e-13, plus a tangency sweep over critical points. At most 4
/// points; 4 for exterior foci, at least 2 for interior.
std::vector<Complex> conic_circle_intersections(Complex z1, Complex z2,
                                                const Tolerances& tol = {});

}  // namespace alhazen::conic
