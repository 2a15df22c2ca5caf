#pragma once

#include <json.hpp>

#include "alhazen/classify.hpp"
#include "alhazen/conic.hpp"
#include "alhazen/metric.hpp"
#include "alhazen/reflect.hpp"
#include "alhazen/selftest.hpp"

namespace alhazen::report {

using nlohmann::json;

json complex_json(Complex z);

json reflection_json(const reflect::ReflectionSolution& sol, Complex z1,
                     Complex z2, const std::string& kind);
json metric_json(const metric::MetricQuery& q);
json level_set_json(const metric::LevelSet& ls);
json profile_json(const classify::RootProfile& p);
json conic_json(const conic::ConicModel& m,
                const std::vector<Complex>& circle_points);
json selftest_json(const selftest::Report& r);

}  // namespace alhazen::report
