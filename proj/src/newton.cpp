#include "wps/newton.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace wps {

// The diagonal (t,t) first meets the polyhedron at t0 = min over support
// points of max(a,b) and over segment/diagonal crossings; the threshold is
// then 1/t0 capped at 1.
Rat newton_lct(const std::vector<std::pair<Int, Int>>& support) {
  if (support.empty()) throw std::invalid_argument("newton_lct: empty support");

  std::optional<Rat> t0;
  auto update = [&](const Rat& t) {
    if (!t0 || t < *t0) t0 = t;
  };

  for (auto [a, b] : support) update(Rat(std::max(a, b)));

  for (size_t i = 0; i < support.size(); ++i)
    for (size_t j = i + 1; j < support.size(); ++j) {
      auto [a1, b1] = support[i];
      auto [a2, b2] = support[j];
      Int den = (a1 - a2) - (b1 - b2);
      if (den == 0) continue;
      Rat lam = make_rat(b2 - a2, den);
      if (lam < 0 || lam > 1) continue;
      Rat t = lam * a1 + (1 - lam) * a2;
      update(t);
    }

  if (*t0 <= 0) return Rat(1);
  Rat c = Rat(1) / *t0;
  return std::min(Rat(1), c);
}

}  // namespace wps
