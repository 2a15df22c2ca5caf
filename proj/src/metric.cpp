#include "alhazen/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace alhazen::metric {

MetricQuery s_disk(Complex z1, Complex z2, const Tolerances& tol) {
  if (!is_finite(z1) || !is_finite(z2)) throw DomainError("invalid input");
  tol.validate();
  if (std::abs(z1) >= 1.0 || std::abs(z2) >= 1.0)
    throw DomainError("points must lie in the open unit disk");

  MetricQuery q;
  q.z1 = z1;
  q.z2 = z2;

  if (z1 == z2) {
    q.result = 0.0;
    q.witness = z1 == Complex{0.0} ? Complex{1.0} : z1 / std::abs(z1);
    return q;
  }
  if (z1 == Complex{0.0} || z2 == Complex{0.0}) {
    const Complex z = z1 == Complex{0.0} ? z2 : z1;
    q.result = std::abs(z) / (2.0 - std::abs(z));
    q.witness = z / std::abs(z);
    return q;
  }
  if (z2 == -z1) {
    const Complex unit = z1 / std::abs(z1);
    q.result = std::abs(z1);
    q.witness = lex_less(unit, -unit) ? -unit : unit;
    return q;
  }

  const reflect::ReflectionSolution sol = reflect::solve_interior(z1, z2, tol);
  q.result = std::abs(z1 - z2) / sol.path_length;
  q.witness = sol.u;
  return q;
}

namespace {

double boundary_sum(Complex z1, Complex z2, double t) {
  const Complex w = std::polar(1.0, t);
  return std::abs(z1 - w) + std::abs(z2 - w);
}

std::shared_ptr<const std::vector<Complex>> circle_grid(long n) {
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const std::vector<Complex>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto grid = std::make_shared<std::vector<Complex>>();
  grid->reserve(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    grid->emplace_back(std::cos(t), std::sin(t));
  }
  cache[n] = grid;
  return cache[n];
}

}  // namespace

BoundaryMin min_boundary_sum(Complex z1, Complex z2, long n) {
  if (!is_finite(z1) || !is_finite(z2)) throw DomainError("invalid input");
  if (n < 3) throw DomainError("invalid input");

  const auto grid = circle_grid(n);
  const double x1 = z1.real(), y1 = z1.imag();
  const double x2 = z2.real(), y2 = z2.imag();
  long best = 0;
  double best_sum = std::numeric_limits<double>::infinity();
  for (long k = 0; k < n; ++k) {
    const Complex& w = (*grid)[static_cast<size_t>(k)];
    const double dx1 = x1 - w.real(), dy1 = y1 - w.imag();
    const double dx2 = x2 - w.real(), dy2 = y2 - w.imag();
    const double sum = std::sqrt(dx1 * dx1 + dy1 * dy1) + std::sqrt(dx2 * dx2 + dy2 * dy2);
    if (sum < best_sum) {
      best_sum = sum;
      best = k;
    }
  }

  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  double a = step * static_cast<double>(best) - step;
  double b = step * static_cast<double>(best) + step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x_lo = b - inv_phi * (b - a);
  double x_hi = a + inv_phi * (b - a);
  double f_lo = boundary_sum(z1, z2, x_lo);
  double f_hi = boundary_sum(z1, z2, x_hi);
  while (b - a > 1e-14) {
    if (f_lo < f_hi) {
      b = x_hi;
      x_hi = x_lo;
      f_hi = f_lo;
      x_lo = b - inv_phi * (b - a);
      f_lo = boundary_sum(z1, z2, x_lo);
    } else {
      a = x_lo;
      x_lo = x_hi;
      f_lo = f_hi;
      x_hi = a + inv_phi * (b - a);
      f_hi = boundary_sum(z1, z2, x_hi);
    }
  }

  BoundaryMin out;
  out.t = 0.5 * (a + b);
  out.min_sum = boundary_sum(z1, z2, out.t);
  if (best_sum < out.min_sum) {
    out.t = step * static_cast<double>(best);
    out.min_sum = best_sum;
  }
  return out;
}

double s_disk_oracle(Complex z1, Complex z2, long n) {
  if (n < 1000) throw DomainError("n must be at least 1000");
  if (z1 == z2) return 0.0;
  return std::abs(z1 - z2) / min_boundary_sum(z1, z2, n).min_sum;
}

BallCurve::BallCurve(double c_, double t_) : c(c_), t(t_) {
  if (!(c_ >= 0.0 && c_ < 1.0) || !(t_ >= 0.0 && t_ < 1.0))
    throw DomainError("ball parameters must lie in [0, 1)");
}

BallEval ball_poly_eval_detailed(const BallCurve& curve, Complex w) {
  if (!is_finite(w)) throw DomainError("invalid input");
  const double c = curve.c;
  const double t = curve.t;
  const Complex wb = std::conj(w);
  const Complex s = w + wb;
  const Complex m = w * wb;
  const Complex w2 = w * w;
  const Complex wb2 = wb * wb;
  const Complex m2 = m * m;
  const Complex m3 = m2 * m;
  const double c2 = c * c;
  const double c3 = c2 * c;
  const double c4 = c2 * c2;
  const double c5 = c4 * c;
  const double c6 = c4 * c2;
  const double c7 = c6 * c;
  const double c8 = c4 * c4;
  const double t2 = t * t;
  const double t4 = t2 * t2;
  const double t6 = t4 * t2;
  const double t8 = t4 * t4;

  const Complex f1 = wb * c - 1.0;
  const Complex f2 = w * c - 1.0;
  const Complex g1 = Complex{c} - w;
  const Complex g2 = Complex{c} - wb;
  const Complex g1g2 = g1 * g2;

  const Complex disc = (c2 + m - 2.0) * (c2 + m - 2.0) - 4.0 * f1 * f2;
  const Complex term8 = f1 * f2 * disc * disc * t8;

  const Complex poly6 =
      4.0 * m * c8 - 3.0 * s * c7 - 2.0 * (2.0 * m2 + 2.0 * m - 1.0) * c6 -
      s * (13.0 * m + 2.0) * c5 -
      2.0 * (2.0 * m3 - (36.0 * wb2 + 10.0) * w2 - 27.0 * m - 10.0 * wb2 - 4.0) * c4 -
      s * (13.0 * m2 + 92.0 * m + 32.0) * c3 +
      2.0 * (m * (2.0 * m3 - 2.0 * m2 + 27.0 * m + 48.0) +
             2.0 * (5.0 * m + 2.0) * (w2 + wb2)) * c2 -
      m * s * (3.0 * m2 + 2.0 * m + 32.0) * c + 2.0 * m2 * (m + 4.0);
  const Complex term6 = -g1g2 * poly6 * t6;

  const Complex poly4 =
      6.0 * m * c6 - 3.0 * s * c5 + (4.0 * m2 + 16.0 * m + 1.0) * c4 -
      2.0 * s * (13.0 * m + 5.0) * c3 +
      (6.0 * m3 + (16.0 * wb2 + 1.0) * w2 + 52.0 * m + wb2) * c2 -
      m * s * (3.0 * m + 10.0) * c + m2;
  const Complex term4 = g1g2 * g1g2 * poly4 * t4;

  const Complex poly2 = 4.0 * m * c * (c2 + m + 3.0) - (c2 + m) * s;
  const Complex term2 = -c * g1g2 * g1g2 * g1g2 * poly2 * t2;

  const Complex term0 = c2 * m * g1g2 * g1g2 * g1g2 * g1g2;

  const Complex total = term8 + term6 + term4 + term2 + term0;
  BallEval out;
  out.value = total.real();
  out.imag_abs = std::abs(total.imag());
  out.term_scale = std::abs(term8) + std::abs(term6) + std::abs(term4) +
                   std::abs(term2) + std::abs(term0);
  return out;
}

double ball_poly_eval(const BallCurve& curve, Complex w) {
  return ball_poly_eval_detailed(curve, w).value;
}

double ball_poly_eval_at(Complex center, double t, Complex w) {
  if (!is_finite(center) || !is_finite(w)) throw DomainError("invalid input");
  if (center == Complex{0.0}) return ball_poly_eval(BallCurve(0.0, t), w);
  const Complex phase = center / std::abs(center);
  return ball_poly_eval(BallCurve(std::abs(center), t), w * std::conj(phase));
}

LevelSet level_set(double c, double t, int n_angles, const Tolerances& tol) {
  tol.validate();
  if (!(c >= 0.0 && c < 1.0))
    throw DomainError("ball parameters must lie in [0, 1)");
  if (!(t > 0.0 && t < 1.0)) throw DomainError("level set requires 0 < t < 1");
  if (n_angles < 8) throw DomainError("n_angles must be at least 8");

  const BallCurve curve(c, t);
  const Complex z1{c, 0.0};
  const double edge = 1.0 - 1e-9;

  LevelSet out;
  out.center = c;
  out.t = t;

  for (int j = 0; j < n_angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n_angles;
    const Complex dir = std::polar(1.0, theta);
    const double cos_th = dir.real();
    const double sin_th = dir.imag();
    const double r_max =
        -c * cos_th + std::sqrt(edge * edge - c * c * sin_th * sin_th);

    const int coarse = 64;
    std::vector<double> f(coarse + 1, 0.0);
    int bracket = -1;
    bool warned = false;
    for (int k = 1; k <= coarse; ++k) {
      const double r = r_max * k / coarse;
      f[k] = s_disk(z1, z1 + r * dir, tol).result;
      if (f[k] < f[k - 1] - 1e-12 && !warned) {
        ++out.monotonicity_warnings;
        warned = true;
      }
      if (bracket < 0 && f[k] >= t) bracket = k;
    }
    if (bracket < 0) {
      ++out.skipped_angles;
      continue;
    }

    double lo = r_max * (bracket - 1) / coarse;
    double hi = r_max * bracket / coarse;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      if (s_disk(z1, z1 + mid * dir, tol).result >= t)
        hi = mid;
      else
        lo = mid;
    }
    const double r = 0.5 * (lo + hi);

    LevelSetPoint pt;
    pt.theta = theta;
    pt.w = z1 + r * dir;
    pt.s_residual = std::abs(s_disk(z1, pt.w, tol).result - t);
    const BallEval be = ball_poly_eval_detailed(curve, pt.w);
    pt.ball_residual = be.term_scale > 0.0 ? std::abs(be.value) / be.term_scale : 0.0;
    out.points.push_back(pt);
  }
  return out;
}

}  // namespace alhazen::metric
