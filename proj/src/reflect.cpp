#include "alhazen/reflect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alhazen/frame.hpp"

namespace alhazen::reflect {

AlhazenQuartic build_quartic(Complex z1, Complex z2) {
  if (!is_finite(z1) || !is_finite(z2)) throw DomainError("invalid input");
  if (z1 == Complex{0.0} && z2 == Complex{0.0})
    throw DomainError("degenerate: both foci at center");
  // Coefficients are stored so that conj(c0) = -c4 and conj(c1) = -c3 hold
  // bitwise, whatever the compiler does to the products.
  const Complex p = std::conj(z1) * std::conj(z2);
  const Complex q = std::conj(z1) + std::conj(z2);
  AlhazenQuartic out;
  out.z1 = z1;
  out.z2 = z2;
  out.poly.coeffs = {-std::conj(p), std::conj(q), Complex{0.0}, -q, p};
  return out;
}

double oriented_angle(Complex z, Complex u, Complex w) {
  if (!is_finite(z) || !is_finite(u) || !is_finite(w))
    throw DomainError("invalid input");
  if (u == z || u == w) throw DomainError("undefined angle");
  return std::arg((w - u) / (z - u));
}

ReflectionResidual reflection_residual(Complex z1, Complex z2, Complex u) {
  const Complex u2 = u * u;
  const Complex t1 = std::conj(z1) * std::conj(z2) * u2;
  const Complex t2 = -(std::conj(z1) + std::conj(z2)) * std::conj(u) * u2;
  const Complex a = t1 + t2;
  const double norm_u = std::norm(u);
  ReflectionResidual r;
  r.identity = 2.0 * std::abs(a.imag());
  r.orientation = 2.0 * a.real() + 2.0 * norm_u * norm_u;
  r.scale = 2.0 * (std::abs(t1) + std::abs(t2));
  if (r.scale == 0.0) r.scale = 1.0;
  return r;
}

ReflectionCheck check_reflection(Complex z1, Complex z2, Complex u, const Tolerances& tol) {
  if (!is_finite(z1) || !is_finite(z2) || !is_finite(u))
    throw DomainError("invalid input");
  if (u == Complex{0.0} || u == z1 || u == z2)
    throw DomainError("undefined angle");
  tol.validate();
  const ReflectionResidual r = reflection_residual(z1, z2, u);
  if (r.identity > tol.unimodular_eps * r.scale) return ReflectionCheck::Neither;
  if (r.orientation > 0.0) return ReflectionCheck::Equal;
  if (r.orientation < 0.0) return ReflectionCheck::Antipodal;
  return ReflectionCheck::Neither;
}

double ellipse_radius(Complex z1, Complex z2, Complex u, double unimodular_eps) {
  if (std::abs(std::abs(u) - 1.0) > unimodular_eps)
    throw DomainError("point not on the unit circle");
  return std::abs(2.0 - std::conj(u) * z1 - u * std::conj(z2));
}

SegmentDisk segment_meets_disk(Complex z1, Complex z2) {
  if (!is_finite(z1) || !is_finite(z2)) throw DomainError("invalid input");
  if (z1 == z2) throw DomainError("degenerate segment: identical endpoints");
  const Complex d = z2 - z1;
  SegmentDisk out;
  out.line_distance = std::abs(std::conj(z1) * z2 - z1 * std::conj(z2)) / (2.0 * std::abs(d));
  const double t = std::clamp(-(std::conj(d) * z1).real() / std::norm(d), 0.0, 1.0);
  out.blocked = std::abs(z1 + t * d) <= 1.0;
  return out;
}

std::optional<ProblemKind> classify_problem(Complex z1, Complex z2) {
  if (!is_finite(z1) || !is_finite(z2)) throw DomainError("invalid input");
  const double m1 = std::abs(z1);
  const double m2 = std::abs(z2);
  if (m1 < 1.0 && m2 < 1.0) return ProblemKind::Interior;
  if (m1 > 1.0 && m2 > 1.0) {
    if (z1 == z2) return ProblemKind::Exterior;
    return segment_meets_disk(z1, z2).blocked ? ProblemKind::ExteriorBlocked
                                              : ProblemKind::Exterior;
  }
  return std::nullopt;
}

namespace {

ReflectionSolution solve_on_circle(Complex z1, Complex z2, const Tolerances& tol) {
  const AlhazenQuartic q = build_quartic(z1, z2);
  const numerics::RootSet set = numerics::solve_polynomial(q.poly, tol);

  std::vector<Complex> candidates;
  for (const Complex& v : set.unimodular_values())
    candidates.push_back(v / std::abs(v));
  if (candidates.empty())
    throw NumericalError("numerical failure: no unimodular root found");

  std::vector<double> sums(candidates.size());
  double min_sum = std::numeric_limits<double>::infinity();
  double max_sum = -std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < candidates.size(); ++k) {
    sums[k] = std::abs(z1 - candidates[k]) + std::abs(z2 - candidates[k]);
    min_sum = std::min(min_sum, sums[k]);
    max_sum = std::max(max_sum, sums[k]);
  }

  ReflectionSolution sol;
  const double tie = 1e-9;
  Complex best_min = candidates.front();
  Complex best_max = candidates.front();
  bool have_min = false, have_max = false;
  for (size_t k = 0; k < candidates.size(); ++k) {
    if (sums[k] <= min_sum + tie * (1.0 + min_sum)) {
      sol.all_minimizers.push_back(candidates[k]);
      if (!have_min || lex_less(best_min, candidates[k])) {
        best_min = candidates[k];
        have_min = true;
      }
    }
    if (sums[k] >= max_sum - tie * (1.0 + max_sum)) {
      if (!have_max || lex_less(best_max, candidates[k])) {
        best_max = candidates[k];
        have_max = true;
      }
    }
  }
  std::sort(sol.all_minimizers.begin(), sol.all_minimizers.end(), lex_less);

  sol.u = best_min;
  sol.maximizer = best_max;
  sol.path_length = std::abs(z1 - sol.u) + std::abs(z2 - sol.u);
  sol.ellipse_radius = std::abs(2.0 - std::conj(sol.u) * z1 - sol.u * std::conj(z2));
  sol.roots = set;
  return sol;
}

}  // namespace

ReflectionSolution solve_interior(Complex z1, Complex z2, const Tolerances& tol) {
  if (!is_finite(z1) || !is_finite(z2)) throw DomainError("invalid input");
  tol.validate();
  if (std::abs(z1) >= 1.0 || std::abs(z2) >= 1.0)
    throw DomainError("points must lie in the open unit disk");
  if (z1 == Complex{0.0} && z2 == Complex{0.0})
    throw DomainError("degenerate: both foci at center");
  return solve_on_circle(z1, z2, tol);
}

ReflectionSolution solve_exterior(Complex z1, Complex z2, const Tolerances& tol) {
  if (!is_finite(z1) || !is_finite(z2)) throw DomainError("invalid input");
  tol.validate();
  if (std::abs(z1) <= 1.0 || std::abs(z2) <= 1.0)
    throw DomainError("points must lie outside the closed unit disk");
  if (z1 != z2 && segment_meets_disk(z1, z2).blocked)
    throw DomainError("segment crosses mirror: direct path exists");
  return solve_on_circle(z1, z2, tol);
}

std::optional<ClosedForm> closed_form(Complex z1, Complex z2) {
  if (!is_finite(z1) || !is_finite(z2)) throw DomainError("invalid input");
  if (z1 == Complex{0.0} && z2 == Complex{0.0}) return std::nullopt;

  // One focus at the center: the quartic drops to a cubic with roots 0 and
  // the two ends of the diameter through the other focus.
  if (z1 == Complex{0.0} || z2 == Complex{0.0}) {
    const Complex z = z1 == Complex{0.0} ? z2 : z1;
    const Complex unit = z / std::abs(z);
    ClosedForm out;
    out.case_id = 1;
    out.roots = {Complex{0.0}, unit, -unit};
    if (std::abs(z) < 1.0) out.s_value = std::abs(z) / (2.0 - std::abs(z));
    return out;
  }

  if (z2 == -z1) {
    const Complex unit = z1 / std::abs(z1);
    ClosedForm out;
    out.case_id = 2;
    out.roots = {unit, -unit, Complex{0.0, 1.0} * unit, -Complex{0.0, 1.0} * unit};
    if (std::abs(z1) < 1.0) out.s_value = std::abs(z1);
    return out;
  }

  if (z1 == z2) {
    const Complex z = z1;
    const double m = std::abs(z);
    const Complex unit = z / m;
    ClosedForm out;
    out.case_id = 3;
    out.roots = {unit, -unit};
    if (m < 1.0) {
      const double s = std::sqrt(1.0 - m * m);
      out.roots.push_back((1.0 + s) / std::conj(z));
      out.roots.push_back((1.0 - s) / std::conj(z));
    } else if (m > 1.0) {
      const Complex s{0.0, std::sqrt(m * m - 1.0)};
      out.roots.push_back((1.0 + s) / std::conj(z));
      out.roots.push_back((1.0 - s) / std::conj(z));
    } else {
      out.roots.push_back(z);
      out.roots.push_back(z);
    }
    return out;
  }

  if (std::abs(z1) == std::abs(z2)) {
    const detail::Frame f = detail::normalize_pair(z1, z2);
    const double rho = std::abs(z1);
    const double k = std::cos(f.alpha) / rho;
    ClosedForm out;
    out.case_id = 4;
    out.roots = {detail::from_frame(f, Complex{1.0}), detail::from_frame(f, Complex{-1.0})};
    if (k <= 1.0) {
      const double s = std::sqrt(1.0 - k * k);
      out.roots.push_back(detail::from_frame(f, Complex{k, s}));
      out.roots.push_back(detail::from_frame(f, Complex{k, -s}));
    } else {
      const double s = std::sqrt(k * k - 1.0);
      out.roots.push_back(detail::from_frame(f, Complex{k + s}));
      out.roots.push_back(detail::from_frame(f, Complex{k - s}));
    }
    return out;
  }

  if ((z1 * std::conj(z2)).imag() == 0.0) {
    const double t = (z1 * std::conj(z2)).real() / std::norm(z2);
    const Complex z = z2;
    const Complex unit = z / std::abs(z);
    const auto [r3, r4] =
        numerics::detail::quadratic_roots(t * std::conj(z), -(1.0 + t), t * z);
    ClosedForm out;
    out.case_id = 5;
    out.roots = {unit, -unit, r3, r4};
    return out;
  }

  return std::nullopt;
}

}  // namespace alhazen::reflect
