#include "wps/singular.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wps {

std::string SingularPoint::label() const {
  std::ostringstream os;
  if (kind == Kind::Coordinate) {
    os << "P" << coord_index;
  } else {
    os << "(x" << vanishing[0] << "=x" << vanishing[1] << "=0)";
  }
  return os.str();
}

bool coordinate_point_on_surface(const Surface& s, int i) {
  return !s.has_pure_power(i);
}

std::vector<SingularPoint> singular_points(const Surface& s) {
  const auto& q = s.ws.q;
  std::vector<SingularPoint> out;

  for (int i = 0; i < 4; ++i) {
    if (q[i] <= 1 || !coordinate_point_on_surface(s, i)) continue;
    SingularPoint p;
    p.kind = SingularPoint::Kind::Coordinate;
    p.coord_index = i;
    p.index = q[i];
    p.count = 1;
    // Pairs (j,k) among the other indices; admissible iff some support
    // monomial avoids both, so that (x_j=x_k=0) is not inside X.
    std::vector<int> others;
    for (int v = 0; v < 4; ++v)
      if (v != i) others.push_back(v);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        int j = others[a], k = others[b];
        int l = others[3 - a - b];
        if (s.has_monomial_in({i, l}))
          p.charts.push_back({i, {j, k}, l});
      }
    out.push_back(std::move(p));
  }

  for (int c = 0; c < 4; ++c)
    for (int dd = c + 1; dd < 4; ++dd) {
      Int g = std::gcd(q[c], q[dd]);
      if (g <= 1) continue;
      auto rsup = s.support_in({c, dd});
      if (rsup.empty()) {
        std::ostringstream os;
        os << "singular line (x" << ([&] {
          for (int v = 0; v < 4; ++v)
            if (v != c && v != dd) return v;
          return -1;
        }()) << "=...=0) through P" << c << " and P" << dd
           << " lies inside X: non-isolated singularities; the multiplicity criteria do not apply";
        throw NonIsolatedError(os.str());
      }
      std::vector<Int> pos;
      for (const Monomial& m : rsup) pos.push_back(m.e[c]);
      std::sort(pos.begin(), pos.end());
      pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
      Int count = 0;
      if (pos.size() >= 2) {
        // step: gcd of position offsets; equals the smallest positive
        // difference on a full generic support.
        Int step = 0;
        for (Int p : pos) step = std::gcd(step, p - pos.front());
        count = (pos.back() - pos.front()) / step;
      }
      if (count == 0) continue;

      SingularPoint p;
      p.kind = SingularPoint::Kind::Line;
      int a = -1, b = -1;
      for (int v = 0; v < 4; ++v)
        if (v != c && v != dd) (a < 0 ? a : b) = v;
      p.vanishing = {a, b};
      p.index = g;
      p.count = count;
      p.charts.push_back({c, {a, b}, dd});
      p.charts.push_back({dd, {a, b}, c});
      out.push_back(std::move(p));
    }

  return out;
}

}  // namespace wps
