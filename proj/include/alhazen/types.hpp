#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace alhazen {

using Complex = std::complex<double>;

/// Input violates an operation's stated domain.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative computation failed to meet its accuracy contract.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Accuracy knobs shared by every solver in the library.
///
/// cluster_eps must stay well above root_eps: clustering collapses solver
/// noise, so the grouping radius has to dominate the residual target.
struct Tolerances {
  double root_eps = 1e-12;        ///< polish residual target, relative to coefficient scale
  double unimodular_eps = 1e-10;  ///< half-width of the |u| = 1 acceptance band
  double cluster_eps = 1e-6;      ///< root grouping radius
  double degeneracy_eps = 1e-14;  ///< leading-coefficient cutoff, relative to max |coeff|

  void validate() const {
    if (!(root_eps > 0) || !(unimodular_eps > 0) || !(cluster_eps > 0) ||
        !(degeneracy_eps > 0))
      throw DomainError("tolerances must be strictly positive");
    if (!(cluster_eps > root_eps))
      throw DomainError("cluster_eps must exceed root_eps");
  }
};

/// Lexicographic order on (re, im); the tie-break order used everywhere a
/// canonical representative must be picked from a set of complex values.
inline bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace alhazen
