#include "alhazen/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace alhazen::numerics {

int Polynomial::effective_degree(double degeneracy_eps) const {
  const double cutoff = degeneracy_eps * coeff_scale();
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (std::abs(coeffs[k]) > cutoff) return k;
  return 0;
}

double Polynomial::coeff_scale() const {
  double scale = 0.0;
  for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));
  return scale;
}

Complex evaluate(const Polynomial& p, Complex x) {
  Complex acc = 0.0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

double evaluate_abs(const Polynomial& p, double abs_x) {
  double acc = 0.0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
    acc = acc * abs_x + std::abs(*it);
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  if (p.coeffs.size() <= 1) {
    d.coeffs = {Complex{0.0}};
    return d;
  }
  d.coeffs.resize(p.coeffs.size() - 1);
  for (size_t k = 1; k < p.coeffs.size(); ++k)
    d.coeffs[k - 1] = static_cast<double>(k) * p.coeffs[k];
  return d;
}

Polynomial from_roots(Complex leading, const std::vector<Complex>& roots) {
  Polynomial p;
  p.coeffs = {leading};
  for (Complex r : roots) {
    p.coeffs.push_back(0.0);
    for (size_t k = p.coeffs.size() - 1; k >= 1; --k)
      p.coeffs[k] = p.coeffs[k - 1] - r * p.coeffs[k];
    p.coeffs[0] *= -r;
  }
  return p;
}

int RootSet::total_multiplicity() const {
  int total = 0;
  for (const Root& r : roots) total += r.multiplicity;
  return total;
}

int RootSet::unimodular_count() const {
  int total = 0;
  for (const Root& r : roots)
    if (r.unimodular) total += r.multiplicity;
  return total;
}

std::vector<Complex> RootSet::unimodular_values() const {
  std::vector<Complex> vals;
  for (const Root& r : roots)
    if (r.unimodular) vals.push_back(r.value);
  return vals;
}

bool MultiplicityCertificate::certified(double rel_eps) const {
  if (multiplicity < 1 || residuals.size() != scales.size()) return false;
  for (size_t k = 0; k < residuals.size(); ++k)
    if (residuals[k] > rel_eps * scales[k]) return false;
  return true;
}

MultiplicityCertificate certify_root(const Polynomial& p, Complex x, int multiplicity) {
  MultiplicityCertificate cert;
  cert.multiplicity = multiplicity;
  Polynomial q = p;
  const double ax = std::abs(x);
  for (int k = 0; k < multiplicity; ++k) {
    cert.residuals.push_back(std::abs(evaluate(q, x)));
    cert.scales.push_back(evaluate_abs(q, ax));
    q = derivative(q);
  }
  return cert;
}

namespace detail {

std::pair<Complex, Complex> quadratic_roots(Complex a, Complex b, Complex c) {
  const Complex disc = b * b - 4.0 * a * c;
  Complex sq = std::sqrt(disc);
  // Pick the sign that avoids cancellation in b + sq.
  if ((std::conj(b) * sq).real() < 0.0) sq = -sq;
  const Complex q = -0.5 * (b + sq);
  if (q == Complex{0.0}) return {Complex{0.0}, -b / a};
  return {q / a, c / q};
}

std::vector<Complex> aberth_roots(const Polynomial& p) {
  const int n = static_cast<int>(p.coeffs.size()) - 1;
  const Complex lead = p.coeffs.back();
  double radius = 0.0;
  for (int k = 0; k < n; ++k)
    radius = std::max(radius, std::abs(p.coeffs[k] / lead));
  radius += 1.0;

  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[k] = std::polar(radius, angle);
  }

  const Polynomial dp = derivative(p);
  for (int sweep = 0; sweep < 200; ++sweep) {
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      const Complex pv = evaluate(p, z[k]);
      const Complex dv = evaluate(dp, z[k]);
      if (pv == Complex{0.0}) continue;
      const Complex newton = dv == Complex{0.0} ? Complex{0.0} : pv / dv;
      Complex repel = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        const Complex diff = z[k] - z[j];
        if (diff != Complex{0.0}) repel += 1.0 / diff;
      }
      const Complex denom = 1.0 - newton * repel;
      const Complex step = denom == Complex{0.0} ? newton : newton / denom;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (worst < 1e-15) break;
  }

  for (int k = 0; k < n; ++k) {
    for (int it = 0; it < 3; ++it) {
      const Complex dv = evaluate(dp, z[k]);
      if (dv == Complex{0.0}) break;
      z[k] -= evaluate(p, z[k]) / dv;
    }
  }
  return z;
}

// Newton iteration against the (m-1)-th derivative, where an m-fold root of
// the original polynomial is simple. The step is capped so a bad derivative
// value cannot throw the iterate out of the cluster's neighborhood.
Complex polish_root(const Polynomial& target, Complex x0, double step_cap) {
  Complex x = x0;
  for (int it = 0; it < 80; ++it) {
    const Complex pv = evaluate(target, x);
    const Complex dv = evaluate(derivative(target), x);
    if (dv == Complex{0.0}) break;
    Complex step = pv / dv;
    const double mag = std::abs(step);
    if (mag > step_cap) step *= step_cap / mag;
    x -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
  }
  return x;
}

}  // namespace detail

RootSet cluster_roots(const std::vector<Complex>& raw, const Tolerances& tol,
                      const std::optional<Polynomial>& polish_target) {
  std::vector<Complex> sorted = raw;
  std::sort(sorted.begin(), sorted.end(), lex_less);

  RootSet set;
  std::vector<bool> used(sorted.size(), false);
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (used[i]) continue;
    std::vector<Complex> group = {sorted[i]};
    used[i] = true;
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(sorted[j] - sorted[i]) <= tol.cluster_eps) {
        group.push_back(sorted[j]);
        used[j] = true;
      }
    }
    Complex centroid = 0.0;
    double diameter = 0.0;
    for (Complex g : group) {
      centroid += g;
      diameter = std::max(diameter, std::abs(g - group.front()));
    }
    centroid /= static_cast<double>(group.size());

    Root root;
    root.value = centroid;
    root.multiplicity = static_cast<int>(group.size());
    if (polish_target && root.multiplicity >= 1) {
      Polynomial target = *polish_target;
      for (int k = 1; k < root.multiplicity; ++k) target = derivative(target);
      const double cap = 4.0 * std::max(diameter, tol.cluster_eps);
      root.value = detail::polish_root(target, centroid, cap);
    }
    set.roots.push_back(root);
  }
  std::sort(set.roots.begin(), set.roots.end(),
            [](const Root& a, const Root& b) { return lex_less(a.value, b.value); });
  return set;
}

namespace {

// Clusters that Aberth separates by more than cluster_eps can still be one
// multiple root smeared by conditioning (a triple root perturbs as eps^(1/3)).
// Try merging nearby clusters into a higher-multiplicity root and keep the
// merge only when the derivative residuals certify it.
constexpr double kWidenRadius = 1e-4;
constexpr double kWidenCertEps = 2.5e-10;

void widen_clusters(RootSet& set, const Polynomial& p, const Tolerances& tol) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < set.roots.size() && !changed; ++i) {
      for (size_t j = i + 1; j < set.roots.size() && !changed; ++j) {
        const Root& a = set.roots[i];
        const Root& b = set.roots[j];
        if (std::abs(a.value - b.value) > kWidenRadius) continue;
        const int m = a.multiplicity + b.multiplicity;
        Complex guess = (a.value * static_cast<double>(a.multiplicity) +
                         b.value * static_cast<double>(b.multiplicity)) /
                        static_cast<double>(m);
        Polynomial target = p;
        for (int k = 1; k < m; ++k) target = derivative(target);
        const double cap = 4.0 * std::max(std::abs(a.value - b.value), tol.cluster_eps);
        guess = detail::polish_root(target, guess, cap);
        if (!certify_root(p, guess, m).certified(kWidenCertEps)) continue;
        Root merged;
        merged.value = guess;
        merged.multiplicity = m;
        set.roots.erase(set.roots.begin() + static_cast<long>(j));
        set.roots[i] = merged;
        changed = true;
      }
    }
  }
  std::sort(set.roots.begin(), set.roots.end(),
            [](const Root& a, const Root& b) { return lex_less(a.value, b.value); });
}

}  // namespace

RootSet solve_polynomial(const Polynomial& p, const Tolerances& tol) {
  tol.validate();
  for (const Complex& c : p.coeffs)
    if (!is_finite(c)) throw DomainError("invalid input");
  if (p.coeffs.empty() || p.coeff_scale() == 0.0)
    throw DomainError("constant polynomial");

  const int deg = p.effective_degree(tol.degeneracy_eps);
  if (deg == 0) throw DomainError("constant polynomial");

  Polynomial trimmed;
  trimmed.coeffs.assign(p.coeffs.begin(), p.coeffs.begin() + deg + 1);

  RootSet set;
  if (deg == 1) {
    Root r;
    r.value = -trimmed.coeffs[0] / trimmed.coeffs[1];
    set.roots = {r};
  } else if (deg == 2) {
    const auto [r1, r2] =
        detail::quadratic_roots(trimmed.coeffs[2], trimmed.coeffs[1], trimmed.coeffs[0]);
    set = cluster_roots({r1, r2}, tol, trimmed);
  } else {
    const std::vector<Complex> raw = detail::aberth_roots(trimmed);
    set = cluster_roots(raw, tol, trimmed);
    widen_clusters(set, trimmed, tol);
  }

  for (Root& r : set.roots)
    r.unimodular = std::abs(std::abs(r.value) - 1.0) <= tol.unimodular_eps;
  std::sort(set.roots.begin(), set.roots.end(),
            [](const Root& a, const Root& b) { return lex_less(a.value, b.value); });
  return set;
}

}  // namespace alhazen::numerics
