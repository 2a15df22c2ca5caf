#include "alhazen/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace alhazen::render {

namespace {

constexpr const char* kCurveColors[6] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                         "#d62728", "#9467bd", "#8c564b"};

double px(double x) { return 400.0 + 360.0 * x; }
double py(double y) { return 400.0 - 360.0 * y; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string point_attr(Complex z) {
  return num(px(z.real())) + "," + num(py(z.imag()));
}

void open_canvas(std::string& svg) {
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  svg += "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
  svg += "<line x1=\"20\" y1=\"400\" x2=\"780\" y2=\"400\" stroke=\"#dddddd\" "
         "stroke-width=\"1\"/>\n";
  svg += "<line x1=\"400\" y1=\"20\" x2=\"400\" y2=\"780\" stroke=\"#dddddd\" "
         "stroke-width=\"1\"/>\n";
  svg += "<circle cx=\"400\" cy=\"400\" r=\"360\" fill=\"none\" stroke=\"#222222\" "
         "stroke-width=\"2\"/>\n";
}

void add_dot(std::string& svg, Complex z, double r, const std::string& color) {
  svg += "<circle cx=\"" + num(px(z.real())) + "\" cy=\"" + num(py(z.imag())) +
         "\" r=\"" + num(r) + "\" fill=\"" + color + "\"/>\n";
}

void add_label(std::string& svg, Complex z, const std::string& text,
               const std::string& color) {
  svg += "<text x=\"" + num(px(z.real()) + 10.0) + "\" y=\"" +
         num(py(z.imag()) - 10.0) +
         "\" font-family=\"monospace\" font-size=\"14\" fill=\"" + color +
         "\">" + text + "</text>\n";
}

}  // namespace

std::string reflection_svg(const reflect::ReflectionSolution& sol, Complex z1,
                           Complex z2) {
  std::string svg;
  open_canvas(svg);

  // The ellipse with foci z1, z2 through the chosen point is tangent to the
  // mirror there; drawn as a sampled polygon so the output stays plain.
  const Complex mid = 0.5 * (z1 + z2);
  const double a = 0.5 * sol.path_length;
  const double cf = 0.5 * std::abs(z1 - z2);
  const double b = std::sqrt(std::max(0.0, a * a - cf * cf));
  if (b > 0.0 && z1 != z2) {
    const Complex axis = (z2 - z1) / std::abs(z2 - z1);
    svg += "<polygon points=\"";
    for (int k = 0; k < 256; ++k) {
      const double t = 2.0 * std::numbers::pi * k / 256.0;
      const Complex p = mid + axis * Complex{a * std::cos(t), b * std::sin(t)};
      if (k) svg += " ";
      svg += point_attr(p);
    }
    svg += "\" fill=\"none\" stroke=\"#27ae60\" stroke-width=\"1\" "
           "stroke-dasharray=\"6 4\"/>\n";
  }

  svg += "<polyline points=\"" + point_attr(z1) + " " + point_attr(sol.u) + " " +
         point_attr(z2) +
         "\" fill=\"none\" stroke=\"#27ae60\" stroke-width=\"2\"/>\n";

  for (const numerics::Root& r : sol.roots.roots) {
    if (!r.unimodular) continue;
    add_dot(svg, r.value / std::abs(r.value), 4.0, "#7f8c8d");
  }
  add_dot(svg, sol.maximizer, 4.0, "#e67e22");
  add_dot(svg, sol.u, 5.0, "#27ae60");
  add_dot(svg, z1, 6.0, "#c0392b");
  add_dot(svg, z2, 6.0, "#2980b9");
  add_label(svg, z1, "z1", "#c0392b");
  add_label(svg, z2, "z2", "#2980b9");
  add_label(svg, sol.u, "u", "#27ae60");

  svg += "<text x=\"20\" y=\"30\" font-family=\"monospace\" font-size=\"14\" "
         "fill=\"#222222\">path " +
         num(sol.path_length) + "  ellipse " + num(sol.ellipse_radius) +
         "</text>\n";
  svg += "</svg>\n";
  return svg;
}

std::string level_set_svg(const std::vector<metric::LevelSet>& sets) {
  std::string svg;
  open_canvas(svg);

  for (size_t i = 0; i < sets.size(); ++i) {
    const metric::LevelSet& ls = sets[i];
    const std::string color = kCurveColors[i % 6];
    if (!ls.points.empty()) {
      svg += "<polygon points=\"";
      for (size_t k = 0; k < ls.points.size(); ++k) {
        if (k) svg += " ";
        svg += point_attr(ls.points[k].w);
      }
      svg += "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    }
    svg += "<text x=\"20\" y=\"" + num(30.0 + 20.0 * static_cast<double>(i)) +
           "\" font-family=\"monospace\" font-size=\"14\" fill=\"" + color +
           "\">t " + num(ls.t) + "</text>\n";
  }
  if (!sets.empty()) add_dot(svg, Complex{sets.front().center}, 3.0, "#222222");
  svg += "</svg>\n";
  return svg;
}

}  // namespace alhazen::render
