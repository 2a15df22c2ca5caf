#pragma once

#include <optional>
#include <vector>

#include "alhazen/types.hpp"

namespace alhazen::numerics {

/// Dense univariate polynomial with complex coefficients, degree 0 first.
struct Polynomial {
  std::vector<Complex> coeffs;

  /// Index of the last coefficient whose modulus exceeds
  /// degeneracy_eps * max coefficient modulus; 0 for the zero polynomial.
  int effective_degree(double degeneracy_eps) const;

  /// Max coefficient modulus.
  double coeff_scale() const;
};

Complex evaluate(const Polynomial& p, Complex x);

/// Sum of |c_k| * |x|^k, the natural magnitude scale of an evaluation at x.
double evaluate_abs(const Polynomial& p, double abs_x);

Polynomial derivative(const Polynomial& p);

/// leading * prod (u - r) over the given roots (repeats allowed).
Polynomial from_roots(Complex leading, const std::vector<Complex>& roots);

struct Root {
  Complex value;
  int multiplicity = 1;
  bool unimodular = false;  ///< | |value| - 1 | <= unimodular_eps
};

struct RootSet {
  std::vector<Root> roots;  ///< sorted by (re, im) of value

  int total_multiplicity() const;
  /// Count of unimodular roots, with multiplicity.
  int unimodular_count() const;
  /// Distinct unimodular values, in stored order.
  std::vector<Complex> unimodular_values() const;
};

/// Residuals |P^(k)(x)| for k = 0..m-1 together with their natural scales;
/// certifies x as an m-fold root when every residual is small relative to
/// its scale.
struct MultiplicityCertificate {
  int multiplicity = 0;
  std::vector<double> residuals;
  std::vector<double> scales;

  bool certified(double rel_eps) const;
};

MultiplicityCertificate certify_root(const Polynomial& p, Complex x, int multiplicity);

/// All complex roots with multiplicity. Degrees <= 2 (after trimming the
/// leading coefficient against degeneracy_eps) use closed forms, higher
/// degrees the Aberth simultaneous iteration followed by Newton polish and
/// multiplicity-aware clustering. Deterministic: identical input yields
/// identical output.
RootSet solve_polynomial(const Polynomial& p, const Tolerances& tol);

/// Greedy grouping of raw root approximations within cluster_eps; each
/// group becomes one root whose value is the group centroid, re-polished by
/// Newton against polish_target when one is supplied.
RootSet cluster_roots(const std::vector<Complex>& raw, const Tolerances& tol,
                      const std::optional<Polynomial>& polish_target = std::nullopt);

namespace detail {

/// Aberth/Ehrlich simultaneous iteration, deterministic starting points on a
/// circle of radius 1 + max |c_k / c_n|, at most 200 sweeps, then 3 Newton
/// steps per root. Input must have exact degree coeffs.size() - 1 >= 1.
std::vector<Complex> aberth_roots(const Polynomial& monic_ready);

/// Cancellation-safe roots of a u^2 + b u + c (|a| must be nonzero).
std::pair<Complex, Complex> quadratic_roots(Complex a, Complex b, Complex c);

}  // namespace detail

}  // namespace alhazen::numerics
