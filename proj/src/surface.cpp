#include "wps/surface.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wps {

bool Surface::is_zeroed(const Monomial& m) const {
  return std::binary_search(zeroed.begin(), zeroed.end(), m);
}

std::vector<Monomial> Surface::support() const {
  std::vector<Monomial> out;
  for (const Monomial& m : enumerate_monomials(ws, ws.d))
    if (!is_zeroed(m)) out.push_back(m);
  return out;
}

std::vector<Monomial> Surface::support_in(const std::set<int>& vars) const {
  std::vector<Monomial> out;
  for (const Monomial& m : enumerate_monomials(ws, ws.d, vars))
    if (!is_zeroed(m)) out.push_back(m);
  return out;
}

bool Surface::has_monomial_in(const std::set<int>& vars) const {
  return !support_in(vars).empty();
}

bool Surface::has_pure_power(int i) const {
  if (ws.d % ws.q[i] != 0) return false;
  Monomial m;
  m.e[i] = ws.d / ws.q[i];
  return !is_zeroed(m);
}

std::string Surface::label() const {
  std::ostringstream os;
  os << "X_" << ws.d << " in P(" << ws.q[0] << "," << ws.q[1] << "," << ws.q[2] << ","
     << ws.q[3] << ")";
  return os.str();
}

Surface make_surface(const WeightSystem& ws, std::vector<Monomial> zeroed) {
  std::sort(zeroed.begin(), zeroed.end());
  zeroed.erase(std::unique(zeroed.begin(), zeroed.end()), zeroed.end());
  for (const Monomial& m : zeroed) {
    for (Int e : m.e)
      if (e < 0) throw std::invalid_argument("zeroed monomial has a negative exponent");
    if (m.degree(ws) != ws.d) {
      std::ostringstream os;
      os << "zeroed monomial " << monomial_str(m) << " has weighted degree " << m.degree(ws)
         << ", not " << ws.d;
      throw std::invalid_argument(os.str());
    }
  }
  return Surface{ws, std::move(zeroed)};
}

}  // namespace wps
