#include "wps/quasismooth.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wps {

std::string QuasiSmoothReport::fail_summary() const {
  std::ostringstream os;
  bool first = true;
  auto add = [&](const std::string& s) {
    if (!first) os << "; ";
    os << s;
    first = false;
  };
  for (const auto& it : itemsI)
    if (!it.ok) add("condition I fails for i=" + std::to_string(it.i));
  for (const auto& it : itemsII)
    if (!it.ok)
      add("condition II fails for pair (" + std::to_string(it.i) + "," + std::to_string(it.j) + ")");
  for (const auto& it : itemsIII)
    if (!it.ok)
      add("condition III fails for pair (" + std::to_string(it.i) + "," + std::to_string(it.j) + ")");
  return os.str();
}

std::string QuasiSmoothReport::flags() const {
  std::string s;
  s += condI ? 'Y' : 'N';
  s += condII ? 'Y' : 'N';
  s += condIII ? 'Y' : 'N';
  return s;
}

QuasiSmoothReport check_quasismooth(const Surface& s) {
  QuasiSmoothReport rep;
  const auto sup = s.support();
  const auto& q = s.ws.q;

  rep.condI = true;
  for (int i = 0; i < 4; ++i) {
    QuasiSmoothReport::ItemI item;
    item.i = i;
    for (const Monomial& m : sup) {
      // x_i^m * x_j with j = i allowed: either a pure power of x_i, or a
      // monomial in x_i and one other variable x_j appearing in degree one.
      bool shape = m.involves(i) && m.active_vars() == 1;
      for (int j = 0; j < 4 && !shape; ++j) {
        if (j == i || m.e[j] != 1) continue;
        bool others_zero = true;
        for (int v = 0; v < 4; ++v)
          if (v != i && v != j && m.e[v] != 0) others_zero = false;
        shape = others_zero;
      }
      if (shape) {
        item.ok = true;
        item.witness = m;
        break;
      }
    }
    if (!item.ok) rep.condI = false;
    rep.itemsI.push_back(item);
  }

  rep.condII = true;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      QuasiSmoothReport::ItemII item;
      item.i = i;
      item.j = j;
      // clause A: a monomial in x_i, x_j only
      for (const Monomial& m : sup) {
        bool only = true;
        for (int v = 0; v < 4; ++v)
          if (v != i && v != j && m.e[v] != 0) only = false;
        if (only) {
          item.ok = true;
          item.via_two_var = true;
          item.witness_a = m;
          break;
        }
      }
      if (!item.ok) {
        // clause B: x_i^c x_j^c' x_k and x_i^d x_j^d' x_l with k, l the two
        // complementary indices
        int k = -1, l = -1;
        for (int v = 0; v < 4; ++v)
          if (v != i && v != j) (k < 0 ? k : l) = v;
        const Monomial* wk = nullptr;
        const Monomial* wl = nullptr;
        for (const Monomial& m : sup) {
          if (m.e[k] == 1 && m.e[l] == 0 && !wk) wk = &m;
          if (m.e[l] == 1 && m.e[k] == 0 && !wl) wl = &m;
        }
        if (wk && wl) {
          item.ok = true;
          item.witness_a = *wk;
          item.witness_b = *wl;
        }
      }
      if (!item.ok) rep.condII = false;
      rep.itemsII.push_back(item);
    }

  rep.condIII = true;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (std::gcd(q[i], q[j]) <= 1) continue;
      QuasiSmoothReport::ItemIII item;
      item.i = i;
      item.j = j;
      auto r = s.support_in({i, j});
      if (!r.empty()) {
        item.ok = true;
        item.witness = r.front();
      } else {
        rep.condIII = false;
      }
      rep.itemsIII.push_back(item);
    }

  return rep;
}

namespace {

int count_positive_vars(const std::array<Int, 4>& e) {
  int n = 0;
  for (Int x : e) n += (x > 0);
  return n;
}

}  // namespace

Irreducibility curve_irreducible(const std::vector<Monomial>& support) {
  if (support.empty()) return {Tri::Unknown, 0};

  // Pull out the fixed part: the componentwise-minimal monomial factor.
  std::array<Int, 4> common = support.front().e;
  for (const Monomial& m : support)
    for (int v = 0; v < 4; ++v) common[v] = std::min(common[v], m.e[v]);
  int extra = count_positive_vars(common);  // coordinate-line components

  std::vector<std::array<Int, 4>> pts;
  for (const Monomial& m : support) {
    std::array<Int, 4> e = m.e;
    for (int v = 0; v < 4; ++v) e[v] -= common[v];
    pts.push_back(e);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  if (pts.size() == 1) {
    // Single monomial: the curve is the fixed part alone.
    if (extra == 0) return {Tri::Unknown, 0};  // constant equation, degenerate
    if (extra == 1) {
      int v = 0;
      while (common[v] == 0) ++v;
      if (common[v] == 1) return {Tri::Yes, 1};  // a reduced coordinate line
      return {Tri::Unknown, 0};                  // non-reduced multiple line
    }
    return {Tri::No, extra};
  }

  // Collinearity of the exponent vectors.
  std::array<Int, 4> dir{};
  for (int v = 0; v < 4; ++v) dir[v] = pts[1][v] - pts[0][v];
  Int g = 0;
  for (Int x : dir) g = std::gcd(g, x < 0 ? -x : x);
  for (int v = 0; v < 4; ++v) dir[v] /= g;
  int pivot = 0;
  while (dir[pivot] == 0) ++pivot;

  bool collinear = true;
  Int tmin = 0, tmax = 0;
  for (const auto& e : pts) {
    Int num = e[pivot] - pts[0][pivot];
    if (num % dir[pivot] != 0) {
      collinear = false;
      break;
    }
    Int t = num / dir[pivot];
    for (int v = 0; v < 4; ++v)
      if (e[v] - pts[0][v] != t * dir[v]) {
        collinear = false;
        break;
      }
    if (!collinear) break;
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }

  if (!collinear) {
    // Two-dimensional exponent span, no fixed component: the generic member
    // of the monomial system is irreducible (system not composed with a
    // pencil).
    if (extra == 0) return {Tri::Yes, 1};
    return {Tri::No, 1 + extra};
  }

  Int length = tmax - tmin;  // primitive lattice length of the segment
  if (length == 1 && extra == 0) return {Tri::Yes, 1};
  if (length == 1) return {Tri::No, 1 + extra};
  // Generic pencil member: `length' distinct components.
  return {Tri::No, length + extra};
}

Tri curve_smooth_outside_sing(const Surface& s, int v) {
  const auto& q = s.ws.q;
  std::set<int> vars;
  for (int i = 0; i < 4; ++i)
    if (i != v) vars.insert(i);
  auto sup = s.support_in(vars);
  if (sup.empty()) return Tri::Unknown;

  std::vector<int> vv(vars.begin(), vars.end());

  // Base-point-freeness off the coordinate strata: every coordinate line of
  // the plane must carry part of the support.
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      bool found = false;
      for (const Monomial& m : sup) {
        bool only = true;
        for (int w : vv)
          if (w != vv[a] && w != vv[b] && m.e[w] != 0) only = false;
        if (only) {
          found = true;
          break;
        }
      }
      if (!found) return Tri::Unknown;
    }

  // Coordinate points of the plane lying on C and smooth on X need a
  // degree-one witness in one of the other two variables.
  for (int i : vv) {
    if (s.has_pure_power(i)) continue;  // P_i not on C
    if (q[i] > 1) continue;             // singular point of X, excluded
    bool ok = false;
    for (const Monomial& m : sup) {
      for (int j : vv) {
        if (j == i) continue;
        int k = vv[0] + vv[1] + vv[2] - i - j;
        if (m.e[j] == 1 && m.e[k] == 0) {
          ok = true;
          break;
        }
      }
      if (ok) break;
    }
    if (!ok) return Tri::Unknown;
  }

  return Tri::Yes;
}

BoundaryCurve boundary_curve(const Surface& s, int v) {
  BoundaryCurve c;
  c.v = v;
  std::set<int> vars;
  for (int i = 0; i < 4; ++i)
    if (i != v) vars.insert(i);
  c.support = s.support_in(vars);
  c.irreducible = curve_irreducible(c.support);
  c.smooth_outside_sing = curve_smooth_outside_sing(s, v);
  c.degree_class = s.ws.q[v];
  return c;
}

}  // namespace wps
