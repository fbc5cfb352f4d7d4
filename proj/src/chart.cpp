#include "wps/chart.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wps {

namespace {

void insert_term(std::vector<ChartTerm>& terms, Int a, Int b) {
  for (auto& t : terms)
    if (t.a == a && t.b == b) return;  // merged generic contributions stay generic
  terms.push_back({a, b, true, Rat(0)});
}

}  // namespace

ChartSupport chart_localize(const std::vector<Monomial>& support, int chart,
                            const SingularPoint& at) {
  if (chart < 0 || chart > 3) throw std::invalid_argument("chart index out of range");

  ChartSupport out;
  out.chart = chart;

  if (at.kind == SingularPoint::Kind::Coordinate) {
    if (chart != at.coord_index)
      throw std::invalid_argument("chart coordinate vanishes at the point: P" +
                                  std::to_string(at.coord_index) + " is not in U" +
                                  std::to_string(chart));
    // Active variables after setting x_chart = 1.
    std::set<int> active;
    for (const Monomial& m : support)
      for (int v = 0; v < 4; ++v)
        if (v != chart && m.e[v] > 0) active.insert(v);
    if (active.size() > 2)
      throw std::invalid_argument("chart support is not planar: more than two directions");
    std::vector<int> axes(active.begin(), active.end());
    for (int v = 0; v < 4 && axes.size() < 2; ++v)
      if (v != chart && !active.count(v)) axes.push_back(v);
    std::sort(axes.begin(), axes.end());
    out.axes = {axes[0], axes[1]};
    for (const Monomial& m : support) insert_term(out.terms, m.e[axes[0]], m.e[axes[1]]);
  } else {
    if (chart != at.charts[0].chart && chart != at.charts[1].chart)
      throw std::invalid_argument("chart coordinate vanishes at the line point");
    // Keep the two transverse directions; exponents of the along-line
    // coordinate evaluate to generic nonzero values at the point.
    out.axes = at.vanishing;
    for (const Monomial& m : support)
      insert_term(out.terms, m.e[out.axes[0]], m.e[out.axes[1]]);
  }

  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

Int chart_multiplicity(const ChartSupport& chart) {
  if (chart.terms.empty()) throw std::invalid_argument("chart support is empty");
  Int best = chart.terms.front().a + chart.terms.front().b;
  for (const auto& t : chart.terms) best = std::min(best, t.a + t.b);
  return best;
}

}  // namespace wps
