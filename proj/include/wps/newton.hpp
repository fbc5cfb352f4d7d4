#pragma once

#include <utility>
#include <vector>

#include "wps/chart.hpp"
#include "wps/rational.hpp"

namespace wps {

// min(1, sup{ c : (1/c, 1/c) lies in the Newton polyhedron }) where the
// polyhedron is the convex hull of support + positive orthant.  Exact for a
// plane curve germ with generic coefficients on the given support.
Rat newton_lct(const std::vector<std::pair<Int, Int>>& support);

inline Rat newton_lct(const ChartSupport& chart) { return newton_lct(chart.points()); }

}  // namespace wps
