#include "alhazen/conic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace alhazen::conic {

ConicModel build_conic(Complex z1, Complex z2) {
  if (!is_finite(z1) || !is_finite(z2)) throw DomainError("invalid input");
  if (z1 == Complex{0.0} || z2 == Complex{0.0})
    throw DomainError("conic degenerates to a line");

  const Complex p = std::conj(z1) * std::conj(z2);
  const Complex q = std::conj(z1) + std::conj(z2);

  ConicModel m;
  m.z1 = z1;
  m.z2 = z2;
  m.A = p.imag();
  m.B = 2.0 * p.real();
  m.C = -p.imag();
  m.D = -q.imag();
  m.E = -q.real();
  m.F = 0.0;
  m.center = 0.5 * (1.0 / std::conj(z1) + 1.0 / std::conj(z2));
  m.normalization = detail::normalize_pair(z1, z2);
  m.alpha = m.normalization.alpha;

  const double r1 = std::abs(z1);
  const double r2 = std::abs(z2);
  const double radial_gap = std::abs(r1 - r2) / std::max(r1, r2);
  const double angular_gap = std::abs((z1 * std::conj(z2)).imag()) / (r1 * r2);
  const bool degenerate = radial_gap <= 1e-10 || angular_gap <= 1e-10;
  m.kind = degenerate ? ConicKind::LinePair : ConicKind::EquilateralHyperbola;
  m.ill_conditioned =
      !degenerate && (radial_gap <= 1e-6 || angular_gap <= 1e-6);

  const Complex dir = std::polar(1.0, -0.5 * std::arg(p));
  m.lines[0] = {m.center, dir};
  m.lines[1] = {m.center, Complex{0.0, 1.0} * dir};

  if (m.kind == ConicKind::LinePair) {
    const double sin_a = std::sin(m.alpha);
    const double cos_a = std::cos(m.alpha);
    m.line_distances = std::make_pair(
        std::abs(r2 - r1) * sin_a / (2.0 * r1 * r2),
        (r1 + r2) * cos_a / (2.0 * r1 * r2));
  } else {
    m.vertex_distance = std::sqrt(std::abs(r1 * r1 - r2 * r2) *
                                  std::sin(2.0 * m.alpha)) /
                        (2.0 * r1 * r2);
  }
  return m;
}

double conic_eval(const ConicModel& m, Complex point) {
  const double x = point.real();
  const double y = point.imag();
  return m.A * x * x + m.B * x * y + m.C * y * y + m.D * x + m.E * y + m.F;
}

Complex circumcenter(Complex a, Complex b, Complex c) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(c))
    throw DomainError("invalid input");
  const Complex den =
      std::conj(a) * (b - c) + std::conj(b) * (c - a) + std::conj(c) * (a - b);
  const double scale = std::abs(a - b) + std::abs(b - c) + std::abs(c - a);
  if (std::abs(den) <= 1e-14 * scale * scale)
    throw DomainError("collinear points");
  const Complex num = std::norm(a) * (b - c) + std::norm(b) * (c - a) +
                      std::norm(c) * (a - b);
  return num / den;
}

Complex orthocenter_origin_triangle(Complex z1, Complex z2) {
  if (!is_finite(z1) || !is_finite(z2)) throw DomainError("invalid input");
  if (z1 == Complex{0.0} || z2 == Complex{0.0})
    throw DomainError("conic degenerates to a line");
  const Complex cross = z1 * std::conj(z2) - std::conj(z1) * z2;
  if (cross == Complex{0.0}) throw DomainError("collinear points");
  const Complex dot = z1 * std::conj(z2) + std::conj(z1) * z2;
  return ((std::conj(z2) - std::conj(z1)) / (std::conj(z1) * std::conj(z2))) *
         (dot / cross);
}

double conic_on_circle(double r1, double r2, double alpha, double t) {
  return r1 * r2 * std::sin(2.0 * t) - r1 * std::sin(t + alpha) -
         r2 * std::sin(t - alpha);
}

namespace {

double circle_deriv(double r1, double r2, double alpha, double t) {
  return 2.0 * r1 * r2 * std::cos(2.0 * t) - r1 * std::cos(t + alpha) -
         r2 * std::cos(t - alpha);
}

}  // namespace

std::vector<Complex> conic_circle_intersections(Complex z1, Complex z2,
                                                const Tolerances& tol) {
  if (!is_finite(z1) || !is_finite(z2)) throw DomainError("invalid input");
  tol.validate();
  if (z1 == Complex{0.0} || z2 == Complex{0.0})
    throw DomainError("conic degenerates to a line");

  const detail::Frame frame = detail::normalize_pair(z1, z2);
  const double r1 = std::abs(z1);
  const double r2 = std::abs(z2);
  const double alpha = frame.alpha;
  const double pi = std::numbers::pi;
  const auto g = [&](double t) { return conic_on_circle(r1, r2, alpha, t); };
  const auto dg = [&](double t) { return circle_deriv(r1, r2, alpha, t); };

  std::vector<double> samples = {-pi, alpha - pi, -alpha, 0.0, alpha, pi - alpha, pi};
  for (int k = 0; k < 512; ++k)
    samples.push_back(-pi + 2.0 * pi * (k + 0.5) / 512.0);
  std::sort(samples.begin(), samples.end());

  struct Hit {
    double t;
    double residual;
  };
  std::vector<Hit> hits;
  const auto add_hit = [&](double t, double min_gap) {
    const Complex pt = std::polar(1.0, t);
    for (const Hit& h : hits)
      if (std::abs(pt - std::polar(1.0, h.t)) <= min_gap) return;
    hits.push_back({t, std::abs(g(t))});
  };

  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    double a = samples[i], b = samples[i + 1];
    double fa = g(a), fb = g(b);
    if (fa == 0.0) {
      add_hit(a, tol.cluster_eps);
      continue;
    }
    if (fa * fb >= 0.0) continue;
    while (b - a > 1e-13) {
      const double mid = 0.5 * (a + b);
      const double fm = g(mid);
      if (fm == 0.0) {
        a = b = mid;
        break;
      }
      if (fa * fm < 0.0) {
        b = mid;
        fb = fm;
      } else {
        a = mid;
        fa = fm;
      }
    }
    add_hit(0.5 * (a + b), tol.cluster_eps);
  }
  if (g(samples.back()) == 0.0) add_hit(samples.back(), tol.cluster_eps);

  // Tangency sweep: an even-order contact leaves no sign change in g, so
  // look for critical points where g itself nearly vanishes.
  const double scale = r1 * r2 + r1 + r2;
  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    double a = samples[i], b = samples[i + 1];
    double fa = dg(a), fb = dg(b);
    if (fa * fb >= 0.0) continue;
    while (b - a > 1e-13) {
      const double mid = 0.5 * (a + b);
      const double fm = dg(mid);
      if (fm == 0.0) {
        a = b = mid;
        break;
      }
      if (fa * fm < 0.0) {
        b = mid;
        fb = fm;
      } else {
        a = mid;
        fa = fm;
      }
    }
    const double t = 0.5 * (a + b);
    if (std::abs(g(t)) <= 1e-10 * scale) add_hit(t, 1e-5);
  }

  if (hits.size() > 4) {
    std::sort(hits.begin(), hits.end(),
              [](const Hit& a, const Hit& b) { return a.residual < b.residual; });
    hits.resize(4);
  }

  std::vector<Complex> points;
  points.reserve(hits.size());
  for (const Hit& h : hits)
    points.push_back(detail::from_frame(frame, std::polar(1.0, h.t)));
  std::sort(points.begin(), points.end(), lex_less);
  return points;
}

}  // namespace alhazen::conic
