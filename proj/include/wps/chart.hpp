#pragma once

#include <array>
#include <utility>
#include <vector>

#include "wps/singular.hpp"
#include "wps/surface.hpp"

namespace wps {

// A polynomial localized to an orbifold chart and translated so the base
// point is the origin, reduced to the two retained coordinate directions.
// Coefficients are tags: generic-nonzero unless an explicit rational was
// forced by a degeneration.
struct ChartTerm {
  Int a = 0, b = 0;
  bool generic_coeff = true;
  Rat coeff;  // meaningful only when !generic_coeff

  auto operator<=>(const ChartTerm& o) const {
    if (auto c = a <=> o.a; c != 0) return c;
    return b <=> o.b;
  }
};

struct ChartSupport {
  int chart = -1;
  std::array<int, 2> axes{-1, -1};  // variable indices of the two retained directions
  std::vector<ChartTerm> terms;     // dedup by (a,b), ascending

  std::vector<std::pair<Int, Int>> points() const {
    std::vector<std::pair<Int, Int>> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.emplace_back(t.a, t.b);
    return out;
  }
};

// Sets x_chart = 1 and keeps the two transverse directions.  For a
// coordinate point the chart origin is the point itself; for a line point
// the along-line exponents are absorbed into (still generic) coefficients
// and only the two vanishing coordinates are retained.
// Rejects charts whose coordinate vanishes at the point.
ChartSupport chart_localize(const std::vector<Monomial>& support, int chart,
                            const SingularPoint& at);

// Minimum total degree over the support; the multiplicity of the generic
// member at the chart origin (no cancellation among generic coefficients).
Int chart_multiplicity(const ChartSupport& chart);

}  // namespace wps
