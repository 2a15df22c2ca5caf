#include "alhazen/classify.hpp"

#include <cmath>
#include <limits>

#include "alhazen/frame.hpp"

namespace alhazen::classify {

RootProfile profile_roots(Complex z1, Complex z2, const Tolerances& tol) {
  if (!is_finite(z1) || !is_finite(z2)) throw DomainError("invalid input");
  tol.validate();

  RootProfile out;
  const double prod = std::abs(z1 * z2);
  out.ratio_lo = prod == 0.0 ? std::numeric_limits<double>::infinity()
                             : std::abs(z1 + z2) / prod;
  if (out.ratio_lo < 1.0)
    out.prediction = Prediction::Four;
  else if (out.ratio_lo > 2.0)
    out.prediction = Prediction::Two;
  else
    out.prediction = Prediction::Indeterminate;

  const reflect::AlhazenQuartic q = reflect::build_quartic(z1, z2);
  out.roots = numerics::solve_polynomial(q.poly, tol);
  out.count_unimodular = out.roots.unimodular_count();

  const int total = out.roots.total_multiplicity();
  int simple_uni = 0, double_uni = 0, triple_uni = 0, off = 0;
  for (const numerics::Root& r : out.roots.roots) {
    if (!r.unimodular)
      off += r.multiplicity;
    else if (r.multiplicity == 1)
      ++simple_uni;
    else if (r.multiplicity == 2)
      ++double_uni;
    else if (r.multiplicity == 3)
      ++triple_uni;
  }

  if (total == 3)
    out.pattern = RootPattern::Cubic;
  else if (total != 4)
    out.pattern = RootPattern::Degenerate;
  else if (simple_uni == 4)
    out.pattern = RootPattern::FourSimple;
  else if (simple_uni == 2 && off == 2)
    out.pattern = RootPattern::TwoSimpleTwoOff;
  else if (double_uni == 1 && simple_uni == 2)
    out.pattern = RootPattern::DoublePlusTwoSimple;
  else if (triple_uni == 1 && simple_uni == 1)
    out.pattern = RootPattern::TriplePlusSimple;
  else
    out.pattern = RootPattern::Degenerate;
  return out;
}

std::pair<Complex, Complex> triple_root_locus(LocusBranch branch, double param) {
  if (!std::isfinite(param)) throw DomainError("invalid input");
  if (branch == LocusBranch::Real) {
    constexpr double upper = 0.41421356237309515;  // sqrt(2) - 1
    if (!(param > -1.0 && param < upper) || param == 0.0)
      throw DomainError("parameter outside locus domain");
    return {Complex{param}, Complex{param / (2.0 * param - 1.0)}};
  }
  const Complex e = std::polar(1.0, param);
  if (std::abs(e - 1.0) < 1e-12 || std::abs(e + 1.0) < 1e-12)
    throw DomainError("parameter outside locus domain");
  const Complex z1 = 0.5 + 0.5 * e;
  return {z1, std::conj(z1)};
}

bool cohn_test(const reflect::AlhazenQuartic& q, const Tolerances& tol) {
  tol.validate();
  if (q.poly.coeffs.size() != 5 ||
      q.poly.effective_degree(tol.degeneracy_eps) != 4)
    throw DomainError("quartic degenerates to a cubic");
  const numerics::RootSet crit =
      numerics::solve_polynomial(numerics::derivative(q.poly), tol);
  for (const numerics::Root& r : crit.roots)
    if (std::abs(r.value) > 1.0 + tol.unimodular_eps) return false;
  return true;
}

std::vector<SharpnessPoint> sharpness_scan(const std::vector<double>& ts,
                                           const Tolerances& tol) {
  tol.validate();
  std::vector<SharpnessPoint> out;
  out.reserve(ts.size());
  for (double t : ts) {
    if (!(t > 0.0) || !std::isfinite(t))
      throw DomainError("sharpness parameter must be positive");
    const Complex z1{1.0 + t};
    const Complex z2 = (1.0 + t) * std::polar(1.0, t);
    SharpnessPoint pt;
    pt.t = t;
    pt.ratio = 2.0 * std::cos(0.5 * t) / (1.0 + t);
    pt.count = profile_roots(z1, z2, tol).count_unimodular;
    out.push_back(pt);
  }
  return out;
}

}  // namespace alhazen::classify
