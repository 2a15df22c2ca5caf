#include "alhazen/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "alhazen/classify.hpp"
#include "alhazen/conic.hpp"
#include "alhazen/metric.hpp"
#include "alhazen/numerics.hpp"
#include "alhazen/reflect.hpp"
#include "alhazen/sampling.hpp"

namespace alhazen::selftest {

int Report::total_checks() const {
  int n = 0;
  for (const SuiteResult& s : suites) n += s.checks;
  return n;
}

int Report::total_failures() const {
  int n = 0;
  for (const SuiteResult& s : suites) n += s.failures;
  return n;
}

namespace {

struct Suite {
  SuiteResult result;

  explicit Suite(std::string name) { result.name = std::move(name); }

  void check(bool ok, const char* what, int sample = -1) {
    ++result.checks;
    if (ok) return;
    ++result.failures;
    if (result.messages.size() < 8) {
      std::string msg = what;
      if (sample >= 0) msg += " (sample " + std::to_string(sample) + ")";
      result.messages.push_back(msg);
    }
  }
};

double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty() ? 0.0 : 1e300;
  double worst = 0.0;
  const auto one_sided = [&](const std::vector<Complex>& from,
                             const std::vector<Complex>& to) {
    for (Complex p : from) {
      double best = 1e300;
      for (Complex q : to) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
  };
  one_sided(a, b);
  one_sided(b, a);
  return worst;
}

std::vector<Complex> projected_unimodular(const numerics::RootSet& set) {
  std::vector<Complex> out;
  for (const Complex& v : set.unimodular_values()) out.push_back(v / std::abs(v));
  return out;
}

SuiteResult suite_quartic_structure(sampling::Rng& rng) {
  Suite s("quartic-structure");
  for (int i = 0; i < 200; ++i) {
    const Complex z1 = rng.mixed_point();
    const Complex z2 = rng.mixed_point();
    const reflect::AlhazenQuartic q = reflect::build_quartic(z1, z2);
    const auto& c = q.poly.coeffs;
    s.check(c.size() == 5, "coefficient count", i);
    s.check(c[2] == Complex{0.0}, "middle coefficient vanishes", i);
    s.check(std::conj(c[0]) == -c[4], "self-inversive pairing c0/c4", i);
    s.check(std::conj(c[1]) == -c[3], "self-inversive pairing c1/c3", i);
    s.check(q.poly.effective_degree(1e-14) == 4, "full degree", i);
  }
  return s.result;
}

SuiteResult suite_reflection_identity(sampling::Rng& rng) {
  Suite s("reflection-identity");
  const Tolerances tol;
  for (int i = 0; i < 200; ++i) {
    Complex z1 = rng.interior_point();
    Complex z2 = rng.interior_point();
    if (z1 == Complex{0.0} && z2 == Complex{0.0}) z1 = Complex{0.5};
    const reflect::ReflectionSolution sol = reflect::solve_interior(z1, z2, tol);
    for (Complex u : projected_unimodular(sol.roots)) {
      const reflect::ReflectionResidual r = reflect::reflection_residual(z1, z2, u);
      s.check(r.identity <= 1e-9 * r.scale, "identity residual", i);
      s.check(reflect::check_reflection(z1, z2, u, tol) == reflect::ReflectionCheck::Equal,
              "interior roots satisfy the angle law", i);
    }
    s.check(reflect::check_reflection(z1, z2, sol.u, tol) == reflect::ReflectionCheck::Equal,
            "minimizer satisfies the angle law", i);
  }
  return s.result;
}

SuiteResult suite_oracle_agreement(sampling::Rng& rng) {
  Suite s("oracle-agreement");
  for (int i = 0; i < 60; ++i) {
    const Complex z1 = rng.interior_point();
    const Complex z2 = rng.interior_point();
    const double fast = metric::s_disk(z1, z2).result;
    const double slow = metric::s_disk_oracle(z1, z2, 4096);
    s.check(std::abs(fast - slow) <= 1e-8, "grid oracle agrees", i);
  }
  return s.result;
}

SuiteResult suite_closed_form_cases(sampling::Rng& rng) {
  Suite s("closed-form-cases");
  const Tolerances tol;
  const auto verify = [&](Complex z1, Complex z2, int expect_case, int i) {
    const auto cf = reflect::closed_form(z1, z2);
    s.check(cf.has_value(), "configuration recognized", i);
    if (!cf) return;
    s.check(cf->case_id == expect_case, "expected configuration id", i);
    const numerics::RootSet set =
        numerics::solve_polynomial(reflect::build_quartic(z1, z2).poly, tol);
    for (Complex r : cf->roots) {
      double best = 1e300;
      for (const numerics::Root& sr : set.roots)
        best = std::min(best, std::abs(r - sr.value));
      s.check(best <= 1e-9 * (1.0 + std::abs(r)), "closed root found by solver", i);
    }
  };

  for (int i = 0; i < 50; ++i) {
    const Complex z = rng.mixed_point();
    verify(z, Complex{0.0}, 1, i);
    verify(Complex{0.0}, z, 1, i);
    verify(z, -z, 2, i);
    verify(z, z, 3, i);
  }
  for (int i = 0; i < 50; ++i) {
    const Complex z = rng.mixed_point();
    const Complex iz = Complex{0.0, 1.0} * z;
    const Complex options[4] = {std::conj(z), -std::conj(z), iz, -iz};
    const Complex z2 = options[static_cast<int>(rng.uniform(0.0, 4.0)) % 4];
    if (z2 == z || z2 == -z) continue;
    verify(z, z2, 4, i);
  }
  const double dyadic[6] = {0.5, -0.5, 2.0, -2.0, 0.25, -0.25};
  for (int i = 0; i < 50; ++i) {
    const Complex z2 = rng.mixed_point();
    const double t = dyadic[static_cast<int>(rng.uniform(0.0, 6.0)) % 6];
    verify(t * z2, z2, 5, i);
  }
  return s.result;
}

SuiteResult suite_metric_symmetry(sampling::Rng& rng) {
  Suite s("metric-symmetry");
  for (int i = 0; i < 200; ++i) {
    const Complex z1 = rng.interior_point();
    const Complex z2 = rng.interior_point();
    const double ab = metric::s_disk(z1, z2).result;
    const double ba = metric::s_disk(z2, z1).result;
    s.check(std::abs(ab - ba) <= 1e-12, "symmetric value", i);
  }
  return s.result;
}

SuiteResult suite_metric_bounds(sampling::Rng& rng) {
  Suite s("metric-bounds");
  for (int i = 0; i < 200; ++i) {
    const Complex z1 = rng.interior_point();
    const Complex z2 = rng.interior_point();
    const double v = metric::s_disk(z1, z2).result;
    s.check(v >= 0.0 && v < 1.0, "value inside [0, 1)", i);
    s.check(metric::s_disk(z1, z1).result == 0.0, "vanishes on the diagonal", i);
    s.check((v == 0.0) == (z1 == z2), "vanishes only on the diagonal", i);
  }
  for (int i = 0; i < 100; ++i) {
    const Complex a = rng.interior_point();
    const Complex b = rng.interior_point();
    const Complex c = rng.interior_point();
    const double ac = metric::s_disk(a, c).result;
    const double ab = metric::s_disk(a, b).result;
    const double bc = metric::s_disk(b, c).result;
    s.check(ac <= ab + bc + 1e-12, "triangle inequality", i);
  }
  return s.result;
}

SuiteResult suite_rotation_invariance(sampling::Rng& rng) {
  Suite s("rotation-invariance");
  const Tolerances tol;
  for (int i = 0; i < 100; ++i) {
    Complex z1 = rng.interior_point();
    Complex z2 = rng.interior_point();
    if (z1 == z2 || z1 == -z2 || z1 == Complex{0.0} || z2 == Complex{0.0}) continue;
    const Complex phase = std::polar(1.0, rng.uniform(0.0, 6.28));
    const reflect::ReflectionSolution base = reflect::solve_interior(z1, z2, tol);
    const reflect::ReflectionSolution turned =
        reflect::solve_interior(phase * z1, phase * z2, tol);
    s.check(std::abs(base.path_length - turned.path_length) <=
                1e-9 * (1.0 + base.path_length),
            "path length invariant", i);
    s.check(std::abs(turned.u - phase * base.u) <= 1e-8, "minimizer transported", i);
    const double direct = metric::s_disk(z1, z2).result;
    const double conjd = metric::s_disk(std::conj(z1), std::conj(z2)).result;
    s.check(std::abs(direct - conjd) <= 1e-12, "conjugation invariant", i);
  }
  return s.result;
}

SuiteResult suite_ball_specializations(sampling::Rng& rng) {
  Suite s("ball-specializations");
  for (int i = 0; i < 120; ++i) {
    const double c = rng.uniform(0.02, 0.95);
    const Complex w = rng.disk(1.5);
    const metric::BallEval e =
        metric::ball_poly_eval_detailed(metric::BallCurve(c, 0.0), w);
    const double m = std::norm(w);
    const double expected = m * c * c * std::pow(std::norm(Complex{c} - w), 4.0);
    s.check(std::abs(e.value - expected) <=
                1e-10 * std::max(e.term_scale, std::abs(expected)),
            "collapses at zero radius", i);
  }
  for (int i = 0; i < 120; ++i) {
    const double t = rng.uniform(0.02, 0.95);
    const Complex w = rng.disk(1.5);
    const metric::BallEval e =
        metric::ball_poly_eval_detailed(metric::BallCurve(0.0, t), w);
    const double r = std::norm(w);
    const double expected = r * r * t * t * t * t *
                            ((t - 1.0) * (t - 1.0) * r - 4.0 * t * t) *
                            ((t + 1.0) * (t + 1.0) * r - 4.0 * t * t);
    s.check(std::abs(e.value - expected) <=
                1e-10 * std::max(e.term_scale, std::abs(expected)),
            "collapses at centered ball", i);
  }
  return s.result;
}

SuiteResult suite_level_set_residuals(sampling::Rng&) {
  Suite s("level-set-residuals");
  const metric::LevelSet ls = metric::level_set(0.3, 0.3, 64);
  s.check(ls.skipped_angles == 0, "every ray reaches the level");
  s.check(static_cast<int>(ls.points.size()) == 64, "one point per ray");
  for (size_t k = 0; k < ls.points.size(); ++k) {
    s.check(ls.points[k].s_residual <= 1e-9, "metric residual", static_cast<int>(k));
    s.check(ls.points[k].ball_residual <= 1e-6, "polynomial residual",
            static_cast<int>(k));
  }
  return s.result;
}

SuiteResult suite_conic_through_points(sampling::Rng& rng) {
  Suite s("conic-through-points");
  for (int i = 0; i < 200; ++i) {
    const Complex z1 = rng.mixed_point();
    const Complex z2 = rng.mixed_point();
    const conic::ConicModel m = conic::build_conic(z1, z2);
    s.check(m.A + m.C == 0.0, "trace free", i);
    const double coeff_scale = std::abs(m.A) + std::abs(m.B) + std::abs(m.D) +
                               std::abs(m.E) + 1e-300;
    const Complex anchors[4] = {Complex{0.0}, 1.0 / std::conj(z1),
                                1.0 / std::conj(z2), 2.0 * m.center};
    for (Complex w : anchors) {
      const double bound = 1e-10 * coeff_scale * (1.0 + std::norm(w));
      s.check(std::abs(conic_eval(m, w)) <= bound, "anchor on conic", i);
    }
    const Complex w = rng.disk(2.0);
    const double direct = conic_eval(m, w);
    const double mirrored = conic_eval(m, 2.0 * m.center - w);
    s.check(std::abs(direct - mirrored) <=
                1e-9 * coeff_scale * (1.0 + std::norm(w) + std::norm(m.center)),
            "central symmetry", i);
  }
  return s.result;
}

SuiteResult suite_conic_circle_roots(sampling::Rng& rng) {
  Suite s("conic-circle-roots");
  const Tolerances tol;
  for (int i = 0; i < 100; ++i) {
    const Complex z1 = rng.mixed_point();
    const Complex z2 = rng.mixed_point();
    const std::vector<Complex> conic_pts = conic::conic_circle_intersections(z1, z2);
    const numerics::RootSet set =
        numerics::solve_polynomial(reflect::build_quartic(z1, z2).poly, tol);
    s.check(hausdorff(conic_pts, projected_unimodular(set)) <= 1e-9,
            "conic meets circle at the quartic roots", i);
  }
  return s.result;
}

SuiteResult suite_root_count_bounds(sampling::Rng& rng) {
  Suite s("root-count-bounds");
  const Tolerances tol;
  for (int i = 0; i < 300; ++i) {
    const Complex z1 = rng.mixed_point();
    const Complex z2 = rng.mixed_point();
    const classify::RootProfile p = classify::profile_roots(z1, z2, tol);
    s.check(p.roots.total_multiplicity() == 4, "full degree", i);
    s.check(p.count_unimodular >= 2, "at least two circle roots", i);
    if (p.prediction == classify::Prediction::Four)
      s.check(p.count_unimodular == 4, "small ratio forces four", i);
    if (p.prediction == classify::Prediction::Two)
      s.check(p.count_unimodular == 2, "large ratio forces two", i);
    if (p.pattern == classify::RootPattern::FourSimple)
      s.check(p.ratio_lo < 2.0, "four simple keeps ratio under two", i);
    if (p.pattern == classify::RootPattern::TwoSimpleTwoOff)
      s.check(p.ratio_lo > 1.0, "two simple keeps ratio above one", i);
  }
  return s.result;
}

SuiteResult suite_cohn_agreement(sampling::Rng& rng) {
  Suite s("cohn-agreement");
  const Tolerances tol;
  for (int i = 0; i < 200; ++i) {
    const Complex z1 = rng.mixed_point();
    const Complex z2 = rng.mixed_point();
    const reflect::AlhazenQuartic q = reflect::build_quartic(z1, z2);
    const bool all_on_circle =
        numerics::solve_polynomial(q.poly, tol).unimodular_count() == 4;
    s.check(classify::cohn_test(q, tol) == all_on_circle,
            "derivative criterion matches the census", i);
  }
  return s.result;
}

SuiteResult suite_triple_root_locus(sampling::Rng&) {
  Suite s("triple-root-locus");
  const Tolerances tol;
  const auto verify = [&](classify::LocusBranch branch, double param, int i) {
    const auto [z1, z2] = classify::triple_root_locus(branch, param);
    const classify::RootProfile p = classify::profile_roots(z1, z2, tol);
    s.check(p.pattern == classify::RootPattern::TriplePlusSimple,
            "triple plus simple", i);
    const numerics::Polynomial quartic = reflect::build_quartic(z1, z2).poly;
    for (const numerics::Root& r : p.roots.roots) {
      if (r.multiplicity == 3) {
        s.check(std::abs(r.value - 1.0) <= 1e-6, "triple root at one", i);
        s.check(numerics::certify_root(quartic, r.value, 3).certified(1e-6),
                "triple root certified", i);
      }
      if (r.multiplicity == 1)
        s.check(std::abs(r.value + 1.0) <= 1e-6, "simple root at minus one", i);
    }
  };
  for (int k = 0; k < 25; ++k) {
    const double t = -0.95 + 1.35 * (k + 0.5) / 25.0;
    if (std::abs(t) < 1e-2) continue;
    verify(classify::LocusBranch::Real, t, k);
  }
  for (int k = 0; k < 25; ++k)
    verify(classify::LocusBranch::Conjugate, 0.1 + 6.0 * k / 25.0, k);
  return s.result;
}

SuiteResult suite_exterior_reflection(sampling::Rng& rng) {
  Suite s("exterior-reflection");
  const Tolerances tol;
  int done = 0;
  while (done < 100) {
    const Complex z1 = rng.exterior_point();
    const Complex z2 = rng.exterior_point();
    if (reflect::classify_problem(z1, z2) != reflect::ProblemKind::Exterior) continue;
    ++done;
    const reflect::ReflectionSolution sol = reflect::solve_exterior(z1, z2, tol);
    s.check(sol.roots.unimodular_count() == 4, "four circle roots", done);
    s.check(reflect::check_reflection(z1, z2, sol.u, tol) ==
                reflect::ReflectionCheck::Equal,
            "minimizer satisfies the angle law", done);
    for (Complex v : projected_unimodular(sol.roots))
      s.check(sol.path_length <=
                  std::abs(z1 - v) + std::abs(z2 - v) + 1e-9,
              "minimizer beats the other candidates", done);
  }
  return s.result;
}

SuiteResult suite_ellipse_radius(sampling::Rng& rng) {
  Suite s("ellipse-radius");
  const Tolerances tol;
  for (int i = 0; i < 100; ++i) {
    Complex z1 = rng.interior_point();
    Complex z2 = rng.interior_point();
    if (z1 == Complex{0.0} && z2 == Complex{0.0}) z1 = Complex{0.5};
    const reflect::ReflectionSolution sol = reflect::solve_interior(z1, z2, tol);
    for (Complex v : {sol.u, sol.maximizer}) {
      const double sum = std::abs(z1 - v) + std::abs(z2 - v);
      const double r = reflect::ellipse_radius(z1, z2, v);
      s.check(std::abs(r - sum) <= 1e-9 * (1.0 + sum),
              "tangent ellipse radius equals the path", i);
    }
  }
  return s.result;
}

}  // namespace

Report run_selftest(uint64_t seed) {
  sampling::Rng rng(seed);
  Report report;
  report.suites.push_back(suite_quartic_structure(rng));
  report.suites.push_back(suite_reflection_identity(rng));
  report.suites.push_back(suite_oracle_agreement(rng));
  report.suites.push_back(suite_closed_form_cases(rng));
  report.suites.push_back(suite_metric_symmetry(rng));
  report.suites.push_back(suite_metric_bounds(rng));
  report.suites.push_back(suite_rotation_invariance(rng));
  report.suites.push_back(suite_ball_specializations(rng));
  report.suites.push_back(suite_level_set_residuals(rng));
  report.suites.push_back(suite_conic_through_points(rng));
  report.suites.push_back(suite_conic_circle_roots(rng));
  report.suites.push_back(suite_root_count_bounds(rng));
  report.suites.push_back(suite_cohn_agreement(rng));
  report.suites.push_back(suite_triple_root_locus(rng));
  report.suites.push_back(suite_exterior_reflection(rng));
  report.suites.push_back(suite_ellipse_radius(rng));
  return report;
}

}  // namespace alhazen::selftest
