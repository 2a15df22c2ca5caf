#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "alhazen/classify.hpp"
#include "alhazen/conic.hpp"
#include "alhazen/metric.hpp"
#include "alhazen/parse.hpp"
#include "alhazen/reflect.hpp"
#include "alhazen/render.hpp"
#include "alhazen/report.hpp"
#include "alhazen/selftest.hpp"

namespace {

using namespace alhazen;

/// Bad command-line input, as opposed to a valid request outside the domain.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

Complex arg_complex(const std::string& text) {
  try {
    return parse::parse_complex(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

double parse_real(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw UsageError("cannot parse number: " + text);
  return v;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const size_t end = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_real(text.substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw DomainError("cannot write output file: " + out_path);
  file << text;
  if (!file.good()) throw DomainError("cannot write output file: " + out_path);
}

std::string root_lines(const numerics::RootSet& set) {
  std::string out = "roots:\n";
  for (const numerics::Root& r : set.roots) {
    out += "  " + parse::format_complex(r.value) + "  multiplicity " +
           std::to_string(r.multiplicity) +
           (r.unimodular ? "  unimodular\n" : "  off-circle\n");
  }
  return out;
}

std::string reflect_text(const reflect::ReflectionSolution& sol, Complex z1,
                         Complex z2, const std::string& kind) {
  std::string out;
  out += "kind = " + kind + "\n";
  out += "z1 = " + parse::format_complex(z1) + "\n";
  out += "z2 = " + parse::format_complex(z2) + "\n";
  out += "u = " + parse::format_complex(sol.u) + "\n";
  out += "path length = " + fmt("%.12f", sol.path_length) + "\n";
  out += "ellipse radius = " + fmt("%.12f", sol.ellipse_radius) + "\n";
  out += "minimizers =";
  for (size_t k = 0; k < sol.all_minimizers.size(); ++k)
    out += (k ? ", " : " ") + parse::format_complex(sol.all_minimizers[k]);
  out += "\n";
  out += "maximizer = " + parse::format_complex(sol.maximizer) + "\n";
  out += root_lines(sol.roots);
  return out;
}

int run_reflect(const std::vector<std::string>& args, const std::string& kind,
                const std::string& format, double tol_unimodular,
                const std::string& out_path) {
  if (args.size() != 2) throw UsageError("reflect expects exactly two points");
  const Complex z1 = arg_complex(args[0]);
  const Complex z2 = arg_complex(args[1]);

  Tolerances tol;
  tol.unimodular_eps = tol_unimodular;
  const reflect::ReflectionSolution sol = kind == "interior"
                                              ? reflect::solve_interior(z1, z2, tol)
                                              : reflect::solve_exterior(z1, z2, tol);
  if (format == "json")
    emit(report::reflection_json(sol, z1, z2, kind).dump(2) + "\n", out_path);
  else if (format == "svg")
    emit(render::reflection_svg(sol, z1, z2), out_path);
  else
    emit(reflect_text(sol, z1, z2, kind), out_path);
  return 0;
}

int run_metric(const std::vector<std::string>& args, bool check, long n,
               const std::string& format, double tol_unimodular,
               const std::string& out_path) {
  if (args.size() != 2) throw UsageError("metric expects exactly two points");
  const Complex z1 = arg_complex(args[0]);
  const Complex z2 = arg_complex(args[1]);

  Tolerances tol;
  tol.unimodular_eps = tol_unimodular;
  const metric::MetricQuery q = metric::s_disk(z1, z2, tol);

  double oracle = 0.0;
  double difference = 0.0;
  if (check) {
    oracle = metric::s_disk_oracle(z1, z2, n);
    difference = std::abs(q.result - oracle);
  }

  if (format == "json") {
    report::json j = report::metric_json(q);
    if (check) {
      j["oracle"] = oracle;
      j["difference"] = difference;
    }
    emit(j.dump(2) + "\n", out_path);
  } else {
    std::string out;
    out += "s = " + fmt("%.12f", q.result) + "\n";
    out += "witness = " + parse::format_complex(q.witness) + "\n";
    if (check) {
      out += "oracle = " + fmt("%.12f", oracle) + "\n";
      out += "difference = " + fmt("%.3e", difference) + "\n";
    }
    emit(out, out_path);
  }
  return check && difference > 1e-8 ? 3 : 0;
}

int run_levelset(const std::vector<std::string>& args, int n_angles,
                 const std::string& format, const std::string& out_path) {
  if (args.size() != 2)
    throw UsageError("levelset expects a center and a list of levels");
  const double center = parse_real(args[0]);
  const std::vector<double> levels = parse_list(args[1]);

  std::vector<metric::LevelSet> sets;
  sets.reserve(levels.size());
  for (double t : levels) sets.push_back(metric::level_set(center, t, n_angles));

  if (format == "json") {
    report::json j = report::json::array();
    for (const metric::LevelSet& ls : sets) j.push_back(report::level_set_json(ls));
    emit(j.dump(2) + "\n", out_path);
  } else if (format == "svg") {
    emit(render::level_set_svg(sets), out_path);
  } else {
    std::string out = "theta,re,im,s_residual,B_residual\n";
    for (const metric::LevelSet& ls : sets) {
      out += "# t=" + fmt("%.12g", ls.t) + "\n";
      for (const metric::LevelSetPoint& p : ls.points) {
        out += fmt("%.12g", p.theta) + "," + fmt("%.12g", p.w.real()) + "," +
               fmt("%.12g", p.w.imag()) + "," + fmt("%.12g", p.s_residual) + "," +
               fmt("%.12g", p.ball_residual) + "\n";
      }
    }
    emit(out, out_path);
  }
  return 0;
}

int run_classify(const std::vector<std::string>& args,
                 const std::string& sharpness, const std::string& format,
                 double tol_unimodular, const std::string& out_path) {
  Tolerances tol;
  tol.unimodular_eps = tol_unimodular;

  if (!sharpness.empty()) {
    if (!args.empty())
      throw UsageError("sharpness scan does not take points");
    const std::vector<double> ts = parse_list(sharpness);
    const std::vector<classify::SharpnessPoint> pts = classify::sharpness_scan(ts, tol);
    std::string out = "t,ratio,count\n";
    for (const classify::SharpnessPoint& p : pts)
      out += fmt("%.12g", p.t) + "," + fmt("%.12g", p.ratio) + "," +
             std::to_string(p.count) + "\n";
    emit(out, out_path);
    return 0;
  }

  if (args.size() != 2) throw UsageError("classify expects exactly two points");
  const Complex z1 = arg_complex(args[0]);
  const Complex z2 = arg_complex(args[1]);
  const classify::RootProfile p = classify::profile_roots(z1, z2, tol);

  if (format == "json") {
    emit(report::profile_json(p).dump(2) + "\n", out_path);
    return 0;
  }
  const report::json j = report::profile_json(p);
  std::string out;
  out += "count = " + std::to_string(p.count_unimodular) + "\n";
  out += "pattern = " + j["pattern"].get<std::string>() + "\n";
  out += "ratio = " +
         (std::isfinite(p.ratio_lo) ? fmt("%.12g", p.ratio_lo) : std::string("inf")) +
         "\n";
  out += "prediction = " + j["prediction"].get<std::string>() + "\n";
  out += root_lines(p.roots);
  emit(out, out_path);
  return 0;
}

int run_conic(const std::vector<std::string>& args, const std::string& format,
              double tol_unimodular, const std::string& out_path) {
  if (args.size() != 2) throw UsageError("conic expects exactly two points");
  const Complex z1 = arg_complex(args[0]);
  const Complex z2 = arg_complex(args[1]);

  Tolerances tol;
  tol.unimodular_eps = tol_unimodular;
  const conic::ConicModel m = conic::build_conic(z1, z2);
  const std::vector<Complex> pts = conic::conic_circle_intersections(z1, z2, tol);

  if (format == "json") {
    emit(report::conic_json(m, pts).dump(2) + "\n", out_path);
    return 0;
  }
  std::string out;
  out += std::string("kind = ") +
         (m.kind == conic::ConicKind::LinePair ? "line-pair" : "equilateral-hyperbola") +
         "\n";
  out += "A = " + fmt("%.12g", m.A) + "\n";
  out += "B = " + fmt("%.12g", m.B) + "\n";
  out += "C = " + fmt("%.12g", m.C) + "\n";
  out += "D = " + fmt("%.12g", m.D) + "\n";
  out += "E = " + fmt("%.12g", m.E) + "\n";
  out += "F = " + fmt("%.12g", m.F) + "\n";
  out += "center = " + parse::format_complex(m.center) + "\n";
  out += "alpha = " + fmt("%.12g", m.alpha) + "\n";
  for (int k = 0; k < 2; ++k)
    out += "line " + std::to_string(k + 1) + ": point = " +
           parse::format_complex(m.lines[k].point) +
           ", direction = " + parse::format_complex(m.lines[k].direction) + "\n";
  if (m.line_distances)
    out += "line distances = " + fmt("%.12g", m.line_distances->first) + ", " +
           fmt("%.12g", m.line_distances->second) + "\n";
  if (m.vertex_distance)
    out += "vertex distance = " + fmt("%.12g", *m.vertex_distance) + "\n";
  out += std::string("ill-conditioned = ") + (m.ill_conditioned ? "true" : "false") + "\n";
  out += "circle intersections:\n";
  for (Complex p : pts) out += "  " + parse::format_complex(p) + "\n";
  emit(out, out_path);
  return 0;
}

int run_selftest(uint64_t seed, const std::string& format,
                 const std::string& out_path) {
  const selftest::Report report = selftest::run_selftest(seed);
  if (format == "json") {
    emit(report::selftest_json(report).dump(2) + "\n", out_path);
  } else {
    std::string out;
    for (const selftest::SuiteResult& s : report.suites) {
      out += s.name + ": " + std::to_string(s.checks) + " checks, " +
             std::to_string(s.failures) + " failures\n";
      for (const std::string& msg : s.messages) out += "  " + msg + "\n";
    }
    out += std::string("selftest: ") + (report.ok() ? "PASS" : "FAIL") + " (" +
           std::to_string(report.total_checks()) + " checks)\n";
    emit(out, out_path);
  }
  return report.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reflection points, the triangular ratio metric and root "
               "classification for the circular mirror problem"};
  app.require_subcommand(1);

  std::string reflect_kind = "interior", reflect_format = "text", reflect_out;
  double reflect_tol = 1e-10;
  CLI::App* reflect_cmd =
      app.add_subcommand("reflect", "solve the mirror problem for two points");
  reflect_cmd->allow_extras();
  reflect_cmd->add_option("--kind", reflect_kind, "problem kind")
      ->check(CLI::IsMember({"interior", "exterior"}));
  reflect_cmd->add_option("--format", reflect_format, "output format")
      ->check(CLI::IsMember({"text", "json", "svg"}));
  reflect_cmd->add_option("--tol-unimodular", reflect_tol,
                          "half-width of the circle acceptance band");
  reflect_cmd->add_option("--out", reflect_out, "write output to a file");

  bool metric_check = false;
  long metric_n = 1000000;
  std::string metric_format = "text", metric_out;
  double metric_tol = 1e-10;
  CLI::App* metric_cmd =
      app.add_subcommand("metric", "triangular ratio metric on the unit disk");
  metric_cmd->allow_extras();
  metric_cmd->add_flag("--check", metric_check,
                       "compare against the boundary grid oracle");
  metric_cmd->add_option("--n", metric_n, "oracle grid size");
  metric_cmd->add_option("--format", metric_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  metric_cmd->add_option("--tol-unimodular", metric_tol,
                         "half-width of the circle acceptance band");
  metric_cmd->add_option("--out", metric_out, "write output to a file");

  int levelset_n = 256;
  std::string levelset_format = "csv", levelset_out;
  CLI::App* levelset_cmd =
      app.add_subcommand("levelset", "trace metric ball boundaries");
  levelset_cmd->allow_extras();
  levelset_cmd->add_option("--n", levelset_n, "number of rays");
  levelset_cmd->add_option("--format", levelset_format, "output format")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  levelset_cmd->add_option("--out", levelset_out, "write output to a file");

  std::string classify_sharpness, classify_format = "text", classify_out;
  double classify_tol = 1e-10;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "census of the quartic's circle roots");
  classify_cmd->allow_extras();
  classify_cmd->add_option("--sharpness", classify_sharpness,
                           "scan the witness family at these parameters");
  classify_cmd->add_option("--format", classify_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  classify_cmd->add_option("--tol-unimodular", classify_tol,
                           "half-width of the circle acceptance band");
  classify_cmd->add_option("--out", classify_out, "write output to a file");

  std::string conic_format = "text", conic_out;
  double conic_tol = 1e-10;
  CLI::App* conic_cmd =
      app.add_subcommand("conic", "the conic carrying the inverted roots");
  conic_cmd->allow_extras();
  conic_cmd->add_option("--format", conic_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  conic_cmd->add_option("--tol-unimodular", conic_tol,
                        "half-width of the circle acceptance band");
  conic_cmd->add_option("--out", conic_out, "write output to a file");

  uint64_t selftest_seed = 1;
  std::string selftest_format = "text", selftest_out;
  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "run the built-in verification suites");
  selftest_cmd->add_option("--seed", selftest_seed, "random seed");
  selftest_cmd->add_option("--format", selftest_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  selftest_cmd->add_option("--out", selftest_out, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }

  try {
    if (reflect_cmd->parsed())
      return run_reflect(reflect_cmd->remaining(), reflect_kind, reflect_format,
                         reflect_tol, reflect_out);
    if (metric_cmd->parsed())
      return run_metric(metric_cmd->remaining(), metric_check, metric_n,
                        metric_format, metric_tol, metric_out);
    if (levelset_cmd->parsed())
      return run_levelset(levelset_cmd->remaining(), levelset_n, levelset_format,
                          levelset_out);
    if (classify_cmd->parsed())
      return run_classify(classify_cmd->remaining(), classify_sharpness,
                          classify_format, classify_tol, classify_out);
    if (conic_cmd->parsed())
      return run_conic(conic_cmd->remaining(), conic_format, conic_tol, conic_out);
    if (selftest_cmd->parsed())
      return run_selftest(selftest_seed, selftest_format, selftest_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
