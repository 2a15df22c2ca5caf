#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Run the installed binary with the given arguments, capturing stdout+stderr.
RunResult run_cli(const std::string& args) {
  const std::string tmp = "cli_capture.txt";
  const std::string cmd = std::string(CLI_BIN) + " " + args + " > " + tmp + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(tmp);
  std::remove(tmp.c_str());
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("metric subcommand prints the value and witness") {
  const auto r = run_cli("metric 0.5+0.5i -0.8i");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "s = 0.788390824711"));
  CHECK(contains(r.out, "witness ="));
}

TEST_CASE("metric cross-check against the grid oracle") {
  const auto r = run_cli("metric 0.3 -0.2+0.4i --check --n 100000");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "oracle"));
  CHECK(contains(r.out, "difference"));
}

TEST_CASE("reflect emits well-formed json") {
  const auto r = run_cli("reflect 0.5+0.5i -0.8i --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema_version").get<int>() == 1);
  CHECK(j.at("kind").get<std::string>() == "interior");
  CHECK(j.at("roots").size() == 4);
  const double path = j.at("path_length").get<double>();
  const double ellipse = j.at("ellipse_radius").get<double>();
  CHECK(std::abs(path - 1.7666857401959706) < 1e-9);
  CHECK(std::abs(path - ellipse) < 1e-9);
}

TEST_CASE("reflect svg output is a self-contained picture") {
  const auto r = run_cli("reflect 0.5+0.5i -0.8i --format svg");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(contains(r.out, "</svg>"));
  CHECK(contains(r.out, "polygon"));
  CHECK(contains(r.out, "z1"));
  // Identical invocations give identical bytes.
  const auto again = run_cli("reflect 0.5+0.5i -0.8i --format svg");
  CHECK(again.out == r.out);
}

TEST_CASE("reflect handles the exterior regime") {
  const auto r = run_cli("reflect 2.5 -1.2+2.1i --kind exterior --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("kind").get<std::string>() == "exterior");
  CHECK(std::abs(j.at("path_length").get<double>() - 4.2800876671309638) < 1e-9);
}

TEST_CASE("levelset emits csv blocks per level") {
  const auto r = run_cli("levelset 0.3 0.1,0.2 --n 16");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "theta,re,im,s_residual,B_residual"));
  CHECK(contains(r.out, "# t=0.1"));
  CHECK(contains(r.out, "# t=0.2"));
}

TEST_CASE("classify reports the root census") {
  const auto r = run_cli("classify 0.5+0.1i 0.5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "two-simple-two-off"));
  CHECK(contains(r.out, "prediction"));
}

TEST_CASE("classify sharpness scan prints a csv table") {
  const auto r = run_cli("classify --sharpness 0.5,0.1,0.01");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "t,ratio,count"));
  CHECK(contains(r.out, "0.01"));
}

TEST_CASE("conic reports the hyperbola data") {
  const auto r = run_cli("conic 0.5+0.5i -0.8i --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("kind").get<std::string>() == "equilateral-hyperbola");
  CHECK(j.at("circle_intersections").size() == 4);
}

TEST_CASE("selftest runs clean on the default seed") {
  const auto r = run_cli("selftest");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS"));
}

TEST_CASE("domain violations exit with code 2") {
  CHECK(run_cli("metric 1.5 0.3").code == 2);
  CHECK(run_cli("reflect 2 -2 --kind exterior").code == 2);
  CHECK(run_cli("levelset 0.3 0").code == 2);
}

TEST_CASE("argument errors exit with code 4") {
  CHECK(run_cli("metric 0.5+ 0.3").code == 4);
  CHECK(run_cli("metric 0.5").code == 4);
  CHECK(run_cli("metric 0.1 0.2 0.3").code == 4);
  CHECK(run_cli("reflect 0.5 0.3 --format yaml").code == 4);
  CHECK(run_cli("frobnicate 1 2").code == 4);
  CHECK(run_cli("metric 0.1 0.2 --bogus-flag").code == 4);
}

TEST_CASE("--out writes the same bytes the terminal would get") {
  const std::string path = "cli_out_file.txt";
  const auto direct = run_cli("reflect 0.4 0.2i --format json");
  const auto filed = run_cli("reflect 0.4 0.2i --format json --out " + path);
  CHECK(direct.code == 0);
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("help is available at both levels") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("metric --help").code == 0);
}
