#include "alhazen/report.hpp"

#include <cmath>

namespace alhazen::report {

namespace {

json roots_json(const numerics::RootSet& set) {
  json arr = json::array();
  for (const numerics::Root& r : set.roots)
    arr.push_back({{"value", complex_json(r.value)},
                   {"multiplicity", r.multiplicity},
                   {"unimodular", r.unimodular}});
  return arr;
}

json finite_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string pattern_name(classify::RootPattern p) {
  switch (p) {
    case classify::RootPattern::FourSimple: return "four-simple";
    case classify::RootPattern::TwoSimpleTwoOff: return "two-simple-two-off";
    case classify::RootPattern::DoublePlusTwoSimple: return "double-plus-two-simple";
    case classify::RootPattern::TriplePlusSimple: return "triple-plus-simple";
    case classify::RootPattern::Cubic: return "cubic";
    case classify::RootPattern::Degenerate: return "degenerate";
  }
  return "degenerate";
}

std::string prediction_name(classify::Prediction p) {
  switch (p) {
    case classify::Prediction::Four: return "four";
    case classify::Prediction::Two: return "two";
    case classify::Prediction::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

}  // namespace

json complex_json(Complex z) {
  return {{"re", z.real()}, {"im", z.imag()}};
}

json reflection_json(const reflect::ReflectionSolution& sol, Complex z1,
                     Complex z2, const std::string& kind) {
  json minimizers = json::array();
  for (Complex m : sol.all_minimizers) minimizers.push_back(complex_json(m));
  return {{"schema_version", 1},
          {"kind", kind},
          {"z1", complex_json(z1)},
          {"z2", complex_json(z2)},
          {"u", complex_json(sol.u)},
          {"path_length", sol.path_length},
          {"ellipse_radius", sol.ellipse_radius},
          {"minimizers", minimizers},
          {"maximizer", complex_json(sol.maximizer)},
          {"roots", roots_json(sol.roots)}};
}

json metric_json(const metric::MetricQuery& q) {
  return {{"schema_version", 1},
          {"z1", complex_json(q.z1)},
          {"z2", complex_json(q.z2)},
          {"s", q.result},
          {"witness", complex_json(q.witness)}};
}

json level_set_json(const metric::LevelSet& ls) {
  json points = json::array();
  for (const metric::LevelSetPoint& p : ls.points)
    points.push_back({{"theta", p.theta},
                      {"re", p.w.real()},
                      {"im", p.w.imag()},
                      {"s_residual", p.s_residual},
                      {"B_residual", p.ball_residual}});
  return {{"schema_version", 1},
          {"center", ls.center},
          {"t", ls.t},
          {"skipped_angles", ls.skipped_angles},
          {"monotonicity_warnings", ls.monotonicity_warnings},
          {"points", points}};
}

json profile_json(const classify::RootProfile& p) {
  return {{"schema_version", 1},
          {"count_unimodular", p.count_unimodular},
          {"pattern", pattern_name(p.pattern)},
          {"ratio", finite_or_null(p.ratio_lo)},
          {"prediction", prediction_name(p.prediction)},
          {"roots", roots_json(p.roots)}};
}

json conic_json(const conic::ConicModel& m,
                const std::vector<Complex>& circle_points) {
  json lines = json::array();
  for (const conic::ConicLine& l : m.lines)
    lines.push_back({{"point", complex_json(l.point)},
                     {"direction", complex_json(l.direction)}});
  json intersections = json::array();
  for (Complex p : circle_points) intersections.push_back(complex_json(p));
  json j = {{"schema_version", 1},
            {"z1", complex_json(m.z1)},
            {"z2", complex_json(m.z2)},
            {"coefficients",
             {{"A", m.A}, {"B", m.B}, {"C", m.C}, {"D", m.D}, {"E", m.E}, {"F", m.F}}},
            {"center", complex_json(m.center)},
            {"kind", m.kind == conic::ConicKind::LinePair ? "line-pair"
                                                          : "equilateral-hyperbola"},
            {"alpha", m.alpha},
            {"lines", lines},
            {"ill_conditioned", m.ill_conditioned},
            {"circle_intersections", intersections}};
  if (m.line_distances)
    j["line_distances"] = {m.line_distances->first, m.line_distances->second};
  if (m.vertex_distance) j["vertex_distance"] = *m.vertex_distance;
  return j;
}

json selftest_json(const selftest::Report& r) {
  json suites = json::array();
  for (const selftest::SuiteResult& s : r.suites)
    suites.push_back({{"name", s.name},
                      {"checks", s.checks},
                      {"failures", s.failures},
                      {"messages", s.messages}});
  return {{"schema_version", 1},
          {"ok", r.ok()},
          {"total_checks", r.total_checks()},
          {"total_failures", r.total_failures()},
          {"suites", suites}};
}

}  // namespace alhazen::report
