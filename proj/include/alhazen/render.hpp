#pragma once

#include <string>

#include "alhazen/metric.hpp"
#include "alhazen/reflect.hpp"

namespace alhazen::render {

/// Draws the unit circle, the two source points, every unimodular root, and
/// the reflected path through the selected root. Deterministic output: fixed
/// canvas, fixed palette, fixed number formatting.
std::string reflection_svg(const reflect::ReflectionSolution& sol, Complex z1,
                           Complex z2);

/// Draws one or more metric ball boundary curves around a common center.
std::string level_set_svg(const std::vector<metric::LevelSet>& sets);

}  // namespace alhazen::render
