// Acceptance gate: every release-blocking property at full sample count, one
// verdict line per criterion, nonzero exit when anything fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "alhazen/classify.hpp"
#include "alhazen/conic.hpp"
#include "alhazen/metric.hpp"
#include "alhazen/reflect.hpp"
#include "alhazen/render.hpp"
#include "alhazen/sampling.hpp"

using namespace alhazen;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void verdict(int id, bool ok, const std::string& what) {
  std::printf("criterion %2d: %s - %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

double nearest(const std::vector<Complex>& vals, Complex x) {
  double best = 1e300;
  for (Complex v : vals) best = std::min(best, std::abs(v - x));
  return best;
}

double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double h = 0.0;
  for (Complex x : a) h = std::max(h, nearest(b, x));
  for (Complex x : b) h = std::max(h, nearest(a, x));
  return h;
}

std::vector<Complex> projected_unimodular(const numerics::RootSet& rs) {
  std::vector<Complex> out;
  for (Complex v : rs.unimodular_values()) out.push_back(v / std::abs(v));
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Closed forms of the origin and antipodal families, under a second.
void criterion_1() {
  const auto t0 = Clock::now();
  sampling::Rng rng(101);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Complex z = rng.interior_point();
    if (std::abs(z) < 1e-6) z += Complex{0.25, 0.0};
    const double m = std::abs(z);
    worst = std::max(worst,
                     std::abs(metric::s_disk(Complex{0.0}, z).result - m / (2.0 - m)));
    worst = std::max(worst, std::abs(metric::s_disk(z, -z).result - m));
  }
  const double dt = seconds_since(t0);
  verdict(1, worst <= 1e-12 && dt < 1.0,
          "origin and antipodal closed forms (1000 points, max err " +
              fmt("%.1e", worst) + ", " + fmt("%.2f", dt) + "s, limit 1s)");
}

// 2. Metric agrees with the million-point boundary grid oracle.
void criterion_2() {
  const auto t0 = Clock::now();
  sampling::Rng rng(102);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const Complex z1 = rng.interior_point();
    const Complex z2 = rng.interior_point();
    worst = std::max(worst, std::abs(metric::s_disk(z1, z2).result -
                                     metric::s_disk_oracle(z1, z2, 1000000)));
  }
  const double dt = seconds_since(t0);
  verdict(2, worst <= 1e-8 && dt < 60.0,
          "metric vs grid oracle at n=10^6 (500 pairs, max err " + fmt("%.1e", worst) +
              ", " + fmt("%.1f", dt) + "s, limit 60s)");
}

// 3. Every nondegenerate pair yields at least two circle roots.
void criterion_3() {
  sampling::Rng rng(103);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto q = reflect::build_quartic(rng.mixed_point(), rng.mixed_point());
    const auto rs = numerics::solve_polynomial(q.poly, Tolerances{});
    if (rs.unimodular_count() < 2) ++violations;
  }
  verdict(3, violations == 0,
          "at least two circle roots per pair (10000 pairs, " +
              std::to_string(violations) + " violations)");
}

// 4. Reflection points satisfy the angle identity as equal-angle points.
void criterion_4() {
  sampling::Rng rng(104);
  int bad = 0;
  double worst = 0.0;
  const auto examine = [&](Complex z1, Complex z2, const reflect::ReflectionSolution& sol) {
    std::vector<Complex> pts = sol.all_minimizers;
    pts.push_back(sol.u);
    for (Complex m : pts) {
      const auto res = reflect::reflection_residual(z1, z2, m);
      const double rel = res.identity / std::max(1.0, res.scale);
      worst = std::max(worst, rel);
      if (rel > 1e-9 ||
          reflect::check_reflection(z1, z2, m, Tolerances{}) !=
              reflect::ReflectionCheck::Equal)
        ++bad;
    }
  };
  for (int i = 0; i < 10000; ++i) {
    Complex z1 = rng.interior_point();
    Complex z2 = rng.interior_point();
    if (std::abs(z1) < 1e-9 && std::abs(z2) < 1e-9) z1 = Complex{0.3, 0.0};
    examine(z1, z2, reflect::solve_interior(z1, z2, Tolerances{}));
  }
  int done = 0;
  while (done < 1000) {
    const Complex z1 = rng.exterior_point();
    const Complex z2 = rng.exterior_point();
    if (std::abs(z1 - z2) < 1e-9 || reflect::segment_meets_disk(z1, z2).blocked) continue;
    ++done;
    examine(z1, z2, reflect::solve_exterior(z1, z2, Tolerances{}));
  }
  verdict(4, bad == 0,
          "equal-angle identity at every reflection point (10000 interior + 1000 "
          "exterior, worst rel residual " +
              fmt("%.1e", worst) + ", " + std::to_string(bad) + " failures)");
}

// 5. Exterior pairs: four circle roots, four conic intersections, same set.
void criterion_5() {
  sampling::Rng rng(105);
  int bad = 0;
  double worst_h = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Complex z1 = rng.exterior_point();
    const Complex z2 = rng.exterior_point();
    const auto rs =
        numerics::solve_polynomial(reflect::build_quartic(z1, z2).poly, Tolerances{});
    const auto uni = projected_unimodular(rs);
    const auto pts = conic::conic_circle_intersections(z1, z2);
    bool ok = uni.size() == 4 && rs.unimodular_count() == 4 && pts.size() == 4;
    if (ok) {
      const double h = hausdorff(uni, pts);
      worst_h = std::max(worst_h, h);
      ok = h <= 1e-9;
    }
    if (!ok) ++bad;
  }
  verdict(5, bad == 0,
          "four circle roots and four conic intersections agree (1000 exterior pairs, "
          "worst gap " +
              fmt("%.1e", worst_h) + ", " + std::to_string(bad) + " failures)");
}

// 6. The coefficient ratio predicts the circle-root count in both regimes.
void criterion_6() {
  sampling::Rng rng(106);
  int low_seen = 0, high_seen = 0, mismatches = 0, bound_breaks = 0;
  while (low_seen < 10000 || high_seen < 10000) {
    const Complex z1 = rng.mixed_point();
    const Complex z2 = rng.mixed_point();
    const double ratio = std::abs(z1 + z2) / std::abs(z1 * z2);
    const bool low = ratio < 1.0 && low_seen < 10000;
    const bool high = ratio > 2.0 && high_seen < 10000;
    if (!low && !high) continue;
    const auto prof = classify::profile_roots(z1, z2);
    if (low) {
      ++low_seen;
      if (prof.count_unimodular != 4) ++mismatches;
    } else {
      ++high_seen;
      if (prof.count_unimodular != 2) ++mismatches;
    }
    if (prof.pattern == classify::RootPattern::FourSimple && prof.ratio_lo >= 2.0 + 1e-9)
      ++bound_breaks;
    if (prof.pattern == classify::RootPattern::TwoSimpleTwoOff &&
        prof.ratio_lo <= 1.0 - 1e-9)
      ++bound_breaks;
  }
  verdict(6, mismatches == 0 && bound_breaks == 0,
          "ratio regimes predict the count (10000 pairs below 1 and 10000 above 2, " +
              std::to_string(mismatches) + " mismatches, " +
              std::to_string(bound_breaks) + " bound violations)");
}

// 7. The forbidden multiplicity patterns never occur.
void criterion_7() {
  sampling::Rng rng(107);
  int forbidden = 0;
  for (int i = 0; i < 100000; ++i) {
    const auto prof = classify::profile_roots(rng.mixed_point(), rng.mixed_point());
    int double_unimodular = 0, off = 0;
    for (const auto& r : prof.roots.roots) {
      if (r.multiplicity >= 2 && r.unimodular) ++double_unimodular;
      if (!r.unimodular) off += r.multiplicity;
    }
    if (double_unimodular >= 2) ++forbidden;
    if (double_unimodular == 1 && off >= 2) ++forbidden;
  }
  verdict(7, forbidden == 0,
          "excluded double-root patterns absent (100000 pairs, " +
              std::to_string(forbidden) + " occurrences)");
}

// 8. The explicit locus produces a certified triple root plus a simple one.
void criterion_8() {
  int bad = 0;
  const auto examine = [&](Complex z1, Complex z2) {
    const auto q = reflect::build_quartic(z1, z2);
    const auto rs = numerics::solve_polynomial(q.poly, Tolerances{});
    Complex triple{0.0}, simple{0.0};
    bool shape = rs.roots.size() == 2;
    for (const auto& r : rs.roots) {
      if (r.multiplicity == 3) triple = r.value;
      else if (r.multiplicity == 1) simple = r.value;
      else shape = false;
    }
    if (!shape || std::abs(triple - Complex{1.0}) > 1e-4 ||
        std::abs(simple + Complex{1.0}) > 1e-6 ||
        !numerics::certify_root(q.poly, triple, 3).certified(1e-6) ||
        !numerics::certify_root(q.poly, simple, 1).certified(1e-6))
      ++bad;
  };
  const double ub = std::sqrt(2.0) - 1.0;
  int done = 0;
  for (int k = 0; done < 100; ++k) {
    const double t = -0.98 + (ub + 0.96) * k / 110.0;
    if (std::abs(t) < 0.02 || t >= ub - 0.02) continue;
    ++done;
    const auto [z1, z2] = classify::triple_root_locus(classify::LocusBranch::Real, t);
    examine(z1, z2);
  }
  for (int k = 0; k < 100; ++k) {
    const double th = 0.05 + (2.0 * kPi - 0.1) * k / 99.0;
    if (std::abs(th - kPi) < 0.02) continue;
    const auto [z1, z2] = classify::triple_root_locus(classify::LocusBranch::Conjugate, th);
    examine(z1, z2);
  }
  verdict(8, bad == 0,
          "locus gives a certified triple root at 1 and a simple root at -1 (100 "
          "parameters per branch, " +
              std::to_string(bad) + " failures)");
}

// 9. The near-boundary family keeps exactly two roots on the circle.
void criterion_9() {
  int bad = 0;
  for (int k = 1; k <= 5; ++k) {
    const auto sol =
        reflect::solve_interior(Complex{0.5, 0.1 * k}, Complex{0.5, 0.0}, Tolerances{});
    int off = 0;
    for (const auto& r : sol.roots.roots)
      if (!r.unimodular) off += r.multiplicity;
    if (sol.roots.unimodular_count() != 2 || off != 2) ++bad;
  }
  verdict(9, bad == 0,
          "two circle roots and two off-circle roots along the vertical family (5 "
          "members, " +
              std::to_string(bad) + " failures)");
}

// 10. Ball polynomial: printed specializations and traced level sets.
void criterion_10() {
  const auto t0 = Clock::now();
  double worst_spec = 0.0;
  for (int i = 1; i <= 20; ++i) {
    for (int j = 1; j <= 20; ++j) {
      // t = 0 specialization on a c x w grid.
      const double c = 0.93 * i / 20.0;
      const Complex w = std::polar(0.9 * j / 20.0, 2.0 * kPi * (i + j) / 29.0);
      const double d2 = std::norm(Complex{c, 0.0} - w);
      const double expect0 = std::norm(w) * c * c * d2 * d2 * d2 * d2;
      const auto e0 = metric::ball_poly_eval_detailed(metric::BallCurve(c, 0.0), w);
      const double s0 = std::max({e0.term_scale, std::abs(expect0), 1e-300});
      worst_spec = std::max(worst_spec, std::abs(e0.value - expect0) / s0);
      // c = 0 specialization on a t x w grid.
      const double t = 0.93 * i / 20.0;
      const double r = std::norm(w);
      const double t2 = t * t;
      const double expectc = r * r * t2 * t2 *
                             ((t - 1.0) * (t - 1.0) * r - 4.0 * t2) *
                             ((t + 1.0) * (t + 1.0) * r - 4.0 * t2);
      const auto ec = metric::ball_poly_eval_detailed(metric::BallCurve(0.0, t), w);
      const double sc = std::max({ec.term_scale, std::abs(expectc), 1e-300});
      worst_spec = std::max(worst_spec, std::abs(ec.value - expectc) / sc);
    }
  }
  double worst_ball = 0.0;
  int traced = 0;
  for (double t : {0.1, 0.2, 0.3, 0.4, 0.6}) {
    const auto ls = metric::level_set(0.3, t, 720);
    traced += static_cast<int>(ls.points.size());
    for (const auto& p : ls.points) worst_ball = std::max(worst_ball, p.ball_residual);
  }
  const double dt = seconds_since(t0);
  verdict(10, worst_spec <= 1e-10 && worst_ball <= 1e-6 && traced == 5 * 720 && dt < 120.0,
          "ball specializations and level-set membership (worst spec err " +
              fmt("%.1e", worst_spec) + ", worst curve residual " + fmt("%.1e", worst_ball) +
              ", " + std::to_string(traced) + " points, " + fmt("%.1f", dt) +
              "s, limit 120s)");
}

// 11. Triangle centers: the vertex-sum relation and the conic membership.
void criterion_11() {
  sampling::Rng rng(111);
  int done = 0, bad = 0;
  double worst = 0.0;
  while (done < 1000) {
    const Complex z1 = rng.mixed_point();
    const Complex z2 = rng.mixed_point();
    if (std::abs(z1) < 5e-2 || std::abs(z2) < 5e-2) continue;
    if (std::abs(std::imag(z1 * std::conj(z2))) <= 1e-2 * std::abs(z1) * std::abs(z2))
      continue;
    ++done;
    const Complex v1 = 1.0 / std::conj(z1);
    const Complex v2 = 1.0 / std::conj(z2);
    const Complex h = conic::orthocenter_origin_triangle(z1, z2);
    const Complex cc = conic::circumcenter(Complex{0.0}, v1, v2);
    const double scale =
        1.0 + std::abs(h) + 2.0 * std::abs(cc) + std::abs(v1) + std::abs(v2);
    const double sum_res = std::abs(h + 2.0 * cc - (v1 + v2)) / scale;
    const auto m = conic::build_conic(z1, z2);
    const double cs = std::max({std::abs(m.A), std::abs(m.B), std::abs(m.D),
                                std::abs(m.E), 1e-300});
    const double on_res = std::abs(conic::conic_eval(m, h)) / (cs * (1.0 + std::norm(h)));
    worst = std::max({worst, sum_res, on_res});
    if (sum_res > 1e-10 || on_res > 1e-10) ++bad;
  }
  verdict(11, bad == 0,
          "vertex-sum relation and orthocenter membership (1000 triangles, worst rel "
          "residual " +
              fmt("%.1e", worst) + ", " + std::to_string(bad) + " failures)");
}

// 12. Reference figures reproduce byte for byte.
void criterion_12() {
  const std::string dir = GOLDEN_DIR;
  const auto fig = [&](int k) -> std::string {
    switch (k) {
      case 1: {
        const auto sol =
            reflect::solve_interior(Complex{-0.4, 0.2}, Complex{0.3, 0.4}, Tolerances{});
        return render::reflection_svg(sol, Complex{-0.4, 0.2}, Complex{0.3, 0.4});
      }
      case 2: {
        const auto sol =
            reflect::solve_interior(Complex{0.5, 0.5}, Complex{0.0, -0.8}, Tolerances{});
        return render::reflection_svg(sol, Complex{0.5, 0.5}, Complex{0.0, -0.8});
      }
      case 3: {
        const auto sol =
            reflect::solve_interior(Complex{0.5, 0.5}, Complex{0.5, 0.0}, Tolerances{});
        return render::reflection_svg(sol, Complex{0.5, 0.5}, Complex{0.5, 0.0});
      }
      default: {
        std::vector<metric::LevelSet> sets;
        for (double t : {0.1, 0.2, 0.3, 0.4, 0.6})
          sets.push_back(metric::level_set(0.3, t, 720));
        return render::level_set_svg(sets);
      }
    }
  };
  int bad = 0;
  for (int k = 1; k <= 4; ++k) {
    const std::string once = fig(k);
    const std::string twice = fig(k);
    const std::string golden = slurp(dir + "/fig" + std::to_string(k) + ".svg");
    if (once != twice || once != golden || once.empty()) ++bad;
  }
  verdict(12, bad == 0,
          "four reference figures reproduce byte for byte (" + std::to_string(bad) +
              " mismatches)");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (failures == 0)
    std::printf("acceptance: all 12 criteria pass\n");
  else
    std::printf("acceptance: %d criteria failing\n", failures);
  return failures == 0 ? 0 : 1;
}
