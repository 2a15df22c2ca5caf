#pragma once

#include <optional>
#include <vector>

#include "alhazen/numerics.hpp"
#include "alhazen/types.hpp"

namespace alhazen::reflect {

/// The quartic whose unit-circle roots are the reflection points of the
/// circular mirror problem with foci z1, z2:
///
///   conj(z1) conj(z2) u^4 - (conj(z1)+conj(z2)) u^3 + (z1+z2) u - z1 z2 = 0
///
/// Self-inversive by construction: the degree-2 coefficient is exactly zero,
/// conj(c0) = -c4 and conj(c1) = -c3.
struct AlhazenQuartic {
  Complex z1;
  Complex z2;
  numerics::Polynomial poly;
};

/// Throws DomainError for non-finite input or z1 = z2 = 0.
AlhazenQuartic build_quartic(Complex z1, Complex z2);

/// Oriented angle at vertex u from ray [u,z] to ray [u,w], in (-pi, pi].
/// Throws DomainError when u coincides with z or w.
double oriented_angle(Complex z, Complex u, Complex w);

enum class ReflectionCheck { Equal, Antipodal, Neither };

/// Classifies the angle condition at u: Equal when the incidence and
/// reflection angles agree (the cubic identity holds with positive
/// orientation sum), Antipodal when the identity holds but the orientation
/// sum is negative (angle gap of pi), Neither otherwise.
/// Throws DomainError when u is 0, z1 or z2.
ReflectionCheck check_reflection(Complex z1, Complex z2, Complex u, const Tolerances& tol);

/// |identity|: magnitude of the reflection identity
///   conj(z1 z2) u^2 - (conj z1 + conj z2) conj(u) u^2
///   + (z1+z2) conj(u)^2 u - z1 z2 conj(u)^2
/// and the magnitude scale of its terms.
struct ReflectionResidual {
  double identity = 0.0;
  double orientation = 0.0;  ///< 2|u|^4 + twice the real part of the leading terms
  double scale = 1.0;
};

ReflectionResidual reflection_residual(Complex z1, Complex z2, Complex u);

struct ReflectionSolution {
  Complex u = 0.0;                      ///< canonical sum-minimizing circle root
  double path_length = 0.0;             ///< |z1-u| + |z2-u| at u
  double ellipse_radius = 0.0;          ///< |2 - conj(u) z1 - u conj(z2)| at u
  std::vector<Complex> all_minimizers;  ///< circle roots within relative 1e-9 of the min
  Complex maximizer = 0.0;              ///< circle root maximizing the sum
  numerics::RootSet roots;              ///< every quartic root
};

/// Interior problem: both foci strictly inside the unit disk, not both zero.
ReflectionSolution solve_interior(Complex z1, Complex z2, const Tolerances& tol);

/// Exterior problem: both foci strictly outside the closed disk and the
/// segment [z1, z2] disjoint from it. Throws DomainError with
/// "segment crosses mirror: direct path exists" when the segment is blocked.
ReflectionSolution solve_exterior(Complex z1, Complex z2, const Tolerances& tol);

/// Sum of focal distances a tangent ellipse with foci z1, z2 reaches at the
/// unimodular point u, via |2 - conj(u) z1 - u conj(z2)|. Requires
/// | |u| - 1 | <= unimodular_eps.
double ellipse_radius(Complex z1, Complex z2, Complex u,
                      double unimodular_eps = Tolerances{}.unimodular_eps);

struct SegmentDisk {
  bool blocked = false;       ///< closed segment [z1,z2] meets the closed unit disk
  double line_distance = 0.0; ///< distance from 0 to the full line through z1, z2
};

/// Throws DomainError when z1 = z2 (no line).
SegmentDisk segment_meets_disk(Complex z1, Complex z2);

enum class ProblemKind { Interior, Exterior, ExteriorBlocked };

/// Classification by focus position; empty when a focus sits on the circle
/// or the foci straddle it.
std::optional<ProblemKind> classify_problem(Complex z1, Complex z2);

/// Closed-form root list for the factorable configurations:
///   1: a focus at the origin          2: antipodal foci (z2 = -z1)
///   3: coincident foci                4: equal moduli
///   5: foci collinear with the origin (z1 = t z2, t real)
/// s_value carries the closed-form metric value for cases 1 and 2 when the
/// relevant focus is interior. Detection is exact; generic inputs yield
/// an empty optional.
struct ClosedForm {
  int case_id = 0;
  std::vector<Complex> roots;
  std::optional<double> s_value;
};

std::optional<ClosedForm> closed_form(Complex z1, Complex z2);

}  // namespace alhazen::reflect
