#pragma once

#include <vector>

#include "alhazen/reflect.hpp"
#include "alhazen/types.hpp"

namespace alhazen::metric {

/// Value of the triangular ratio metric together with the boundary point
/// attaining it: result = |z1-z2| / (|z1-witness| + |witness-z2|).
struct MetricQuery {
  Complex z1;
  Complex z2;
  double result = 0.0;
  Complex witness = 0.0;
};

/// Triangular ratio metric on the unit disk. Both points must lie strictly
/// inside. Coincident points, a focus at the origin and antipodal foci are
/// short-circuited to their closed forms; everything else goes through the
/// interior reflection solver.
MetricQuery s_disk(Complex z1, Complex z2, const Tolerances& tol = {});

struct BoundaryMin {
  double t = 0.0;       ///< argmin angle
  double min_sum = 0.0; ///< min over the circle of |z1-e^{it}| + |z2-e^{it}|
};

/// Brute-force boundary minimum: n-point uniform grid scan, then
/// golden-section refinement of the best bracket down to width 1e-14.
/// Independent of the quartic machinery; usable as an oracle.
BoundaryMin min_boundary_sum(Complex z1, Complex z2, long n);

/// |z1-z2| / min_boundary_sum, for interior points. Requires n >= 1000.
double s_disk_oracle(Complex z1, Complex z2, long n);

/// Parameters of a metric ball boundary around the real center c: the locus
/// candidate is the zero set of an explicit polynomial B in w and conj(w).
/// Accepts c in [0,1) and t in [0,1); the closed-at-zero ends are needed by
/// the printed specializations (t = 0 and the c -> 0 limit).
struct BallCurve {
  double c = 0.0;
  double t = 0.0;

  BallCurve(double c_, double t_);
};

struct BallEval {
  double value = 0.0;      ///< real part of B(w)
  double imag_abs = 0.0;   ///< |imaginary part|; analytically zero
  double term_scale = 0.0; ///< sum of the five term magnitudes at (c, t, w)
};

BallEval ball_poly_eval_detailed(const BallCurve& curve, Complex w);
double ball_poly_eval(const BallCurve& curve, Complex w);

/// Convenience for a ball around an arbitrary center: rotate w into the
/// positive-real-axis frame of the center, evaluate, same value.
double ball_poly_eval_at(Complex center, double t, Complex w);

struct LevelSetPoint {
  double theta = 0.0;
  Complex w = 0.0;
  double s_residual = 0.0;    ///< |s_disk(c, w) - t|
  double ball_residual = 0.0; ///< |B(w)| / term scale
};

struct LevelSet {
  double center = 0.0;
  double t = 0.0;
  std::vector<LevelSetPoint> points;       ///< ordered by theta
  int skipped_angles = 0;                  ///< rays where t exceeded the reachable sup
  int monotonicity_warnings = 0;           ///< rays with a decreasing coarse sample pair
};

/// Trace { w : s_disk(c, w) = t } along n_angles rays from the center c in
/// [0,1): coarse 64-sample scan for the first bracket, then bisection on the
/// radius to 1e-12. Radial monotonicity is an assumption, not a theorem:
/// violations are counted, not fatal.
LevelSet level_set(double c, double t, int n_angles, const Tolerances& tol = {});

}  // namespace alhazen::metric
