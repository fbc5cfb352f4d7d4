#include "wps/certify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wps/newton.hpp"

namespace wps {

namespace {

Int mod_inverse(Int x, Int m) {
  if (m == 1) return 0;
  Int a = x % m, b = m, u = 1, v = 0;
  while (b != 0) {
    Int t = a / b;
    a -= t * b;
    std::swap(a, b);
    u -= t * v;
    std::swap(u, v);
  }
  u %= m;
  if (u < 0) u += m;
  return u;
}

// #{(alpha, beta) >= 0 : alpha*qa + beta*qb == l}
Int count_solutions(Int qa, Int qb, Int l) {
  if (l < 0) return 0;
  Int g = std::gcd(qa, qb);
  if (l % g != 0) return 0;
  Int qa2 = qa / g, qb2 = qb / g, l2 = l / g;
  Int b0 = (mod_inverse(qb2, qa2) * (l2 % qa2)) % qa2;
  Int bmax = l / qb;
  if (b0 > bmax) return 0;
  return (bmax - b0) / qa2 + 1;
}

std::string var_str(int v) { return "x" + std::to_string(v); }

}  // namespace

std::optional<Int> separating_degree(const Surface& s, int avoid, int projection) {
  if (avoid == projection || avoid < 0 || avoid > 3 || projection < 0 || projection > 3)
    throw std::invalid_argument("separating_degree: avoid and projection must be distinct indices");
  if (!s.has_pure_power(projection))
    throw std::invalid_argument("projection from P" + std::to_string(projection) +
                                " has a possibly infinite fiber: no pure power " +
                                var_str(projection) + "^m of degree " + std::to_string(s.ws.d));
  std::vector<int> others;
  for (int i = 0; i < 4; ++i)
    if (i != avoid && i != projection) others.push_back(i);
  for (Int l = 1; l <= s.ws.pi; ++l) {
    bool ok = true;
    for (int i : others)
      if (count_solutions(s.ws.q[avoid], s.ws.q[i], l) < 2) {
        ok = false;
        break;
      }
    if (ok) return l;
  }
  return std::nullopt;
}

BoundaryInfo boundary_info(const Surface& s, int v) {
  BoundaryInfo info;
  info.v = v;
  info.curve = boundary_curve(s, v);
  Int prod = s.ws.pi / s.ws.q[v];
  info.cap = make_rat(s.ws.d, prod);
  info.value = std::max(make_rat(1, s.ws.q[v]), info.cap);
  info.degree_ok = s.ws.d <= prod;
  info.available = info.curve.irreducible.verdict == Tri::Yes &&
                   info.curve.smooth_outside_sing == Tri::Yes && info.degree_ok;
  return info;
}

namespace {

// Uncovered smooth locus for a candidate cover: strategies cover x_v != 0
// for v in S, boundary pieces cover x_w = 0 for w in B.  Returns nullopt if
// a positive-dimensional or smooth uncovered piece remains.
std::optional<std::vector<LeftoverPoint>> cover_leftover(const Surface& s,
                                                         const std::vector<int>& S,
                                                         const std::vector<int>& B) {
  const auto& q = s.ws.q;
  std::vector<LeftoverPoint> leftover;
  auto in = [](const std::vector<int>& xs, int x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
  };

  if (S.empty()) return std::nullopt;
  if (S.size() == 1) {
    if (in(B, S[0])) return leftover;
    return std::nullopt;  // generic points of the curve C_v stay uncovered
  }
  if (S.size() == 4) return leftover;

  if (S.size() == 2) {
    int a = -1, b = -1;
    for (int v = 0; v < 4; ++v)
      if (!in(S, v)) (a < 0 ? a : b) = v;
    auto rsup = s.support_in({a, b});
    if (rsup.empty()) return std::nullopt;  // the whole line lies in X

    for (auto [x, other] : {std::pair{a, b}, std::pair{b, a}}) {
      (void)other;
      if (s.has_pure_power(x)) continue;  // P_x not on X
      bool covered = false;
      for (int w : B)
        if (w != x) covered = true;
      if (covered) continue;
      if (q[x] > 1)
        leftover.push_back({"P" + std::to_string(x), true, 1, false});
      else
        return std::nullopt;  // smooth uncovered point
    }

    std::vector<Int> pos;
    for (const Monomial& m : rsup) pos.push_back(m.e[a]);
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    Int count = 0;
    if (pos.size() >= 2) {
      Int step = 0;
      for (Int p : pos) step = std::gcd(step, p - pos.front());
      count = (pos.back() - pos.front()) / step;
    }
    if (count > 0) {
      bool covered = false;
      for (int w : B)
        if (in(S, w)) covered = true;
      if (!covered) {
        if (std::gcd(q[a], q[b]) > 1) {
          std::ostringstream os;
          os << "(" << var_str(S[0]) << "=" << var_str(S[1]) << "=0)";
          leftover.push_back({os.str(), true, count, true});
        } else {
          return std::nullopt;  // smooth line points uncovered
        }
      }
    }
    return leftover;
  }

  // S.size() == 3: the single remaining coordinate point.
  int m = -1;
  for (int v = 0; v < 4; ++v)
    if (!in(S, v)) m = v;
  if (s.has_pure_power(m)) return leftover;  // P_m not on X
  bool covered = false;
  for (int w : B)
    if (w != m) covered = true;
  if (covered) return leftover;
  if (q[m] > 1) {
    leftover.push_back({"P" + std::to_string(m), true, 1, false});
    return leftover;
  }
  return std::nullopt;
}

struct CoverKey {
  Rat overall;
  size_t nb, npieces, nline;
  Int npoints;
  std::vector<int> S, B;

  bool operator<(const CoverKey& o) const {
    if (overall != o.overall) return overall < o.overall;
    if (nb != o.nb) return nb < o.nb;
    if (npieces != o.npieces) return npieces < o.npieces;
    if (nline != o.nline) return nline < o.nline;
    if (npoints != o.npoints) return npoints < o.npoints;
    if (S != o.S) return S < o.S;
    return B < o.B;
  }
};

}  // namespace

SmoothCertificate smooth_point_certificate(const Surface& s) {
  std::vector<BoundaryInfo> curves;
  for (int v = 0; v < 4; ++v) curves.push_back(boundary_info(s, v));
  return smooth_point_certificate(s, curves);
}

SmoothCertificate smooth_point_certificate(const Surface& s,
                                           const std::vector<BoundaryInfo>& curves) {
  SmoothCertificate cert;

  // Best separating strategy per avoided index.
  std::array<std::optional<SeparatingStrategy>, 4> best;
  for (int v = 0; v < 4; ++v)
    for (int p = 0; p < 4; ++p) {
      if (p == v || !s.has_pure_power(p)) continue;
      auto l = separating_degree(s, v, p);
      if (!l) continue;
      SeparatingStrategy st{v, p, *l, Rat(BigInt(*l) * s.ws.d, BigInt(s.ws.pi))};
      if (!best[v] || st.bound < best[v]->bound ||
          (st.bound == best[v]->bound && (st.l < best[v]->l ||
                                          (st.l == best[v]->l && p < best[v]->projection))))
        best[v] = st;
    }

  std::vector<int> avail_s, avail_b;
  for (int v = 0; v < 4; ++v) {
    if (best[v]) avail_s.push_back(v);
    if (curves[v].available) avail_b.push_back(v);
  }

  std::optional<CoverKey> bestkey;
  std::vector<LeftoverPoint> bestleft;
  for (unsigned ms = 1; ms < (1u << avail_s.size()); ++ms) {
    std::vector<int> S;
    for (size_t i = 0; i < avail_s.size(); ++i)
      if (ms & (1u << i)) S.push_back(avail_s[i]);
    for (unsigned mb = 0; mb < (1u << avail_b.size()); ++mb) {
      std::vector<int> B;
      for (size_t i = 0; i < avail_b.size(); ++i)
        if (mb & (1u << i)) B.push_back(avail_b[i]);
      auto left = cover_leftover(s, S, B);
      if (!left) continue;
      Rat overall(0);
      for (int v : S) overall = std::max(overall, best[v]->bound);
      for (int v : B) overall = std::max(overall, curves[v].value);
      size_t nline = 0;
      Int npts = 0;
      for (const auto& lp : *left) {
        nline += lp.line;
        npts += lp.count;
      }
      CoverKey key{overall, B.size(), S.size() + B.size(), nline, npts, S, B};
      if (!bestkey || key < *bestkey) {
        bestkey = key;
        bestleft = *left;
      }
    }
  }

  if (!bestkey) {
    cert.feasible = false;
    cert.note = "no covering family of separating systems and boundary bounds";
    return cert;
  }

  cert.feasible = true;
  cert.overall = bestkey->overall;
  for (int v : bestkey->S) cert.strategies.push_back(*best[v]);
  cert.boundaries_used = bestkey->B;
  cert.leftover = bestleft;
  cert.leftover_pass = true;
  return cert;
}

EstimateResult estimate_3_7(const Surface& s, const SingularPoint& p) {
  EstimateResult res;
  const auto& q = s.ws.q;
  for (const auto& ch : p.charts) {
    Rat val;
    if (p.kind == SingularPoint::Kind::Coordinate) {
      val = Rat(BigInt(s.ws.d), BigInt(std::min(q[ch.pair[0]], q[ch.pair[1]])) * q[ch.remaining]);
    } else {
      // Stabilizer-corrected: the local group along the line has order
      // `index', not the chart weight.
      val = Rat(BigInt(p.index) * s.ws.d,
                BigInt(std::min(q[ch.pair[0]], q[ch.pair[1]])) * q[ch.chart] * q[ch.remaining]);
    }
    res.pairs.push_back({ch, val});
    if (!res.value || val < *res.value) res.value = val;
  }
  return res;
}

namespace {

struct LocalizedCurve {
  ChartSupport chart;
  Int m = 0;
};

LocalizedCurve localize_curve(const Surface& s, const SingularPoint& p, int v,
                              const BoundaryCurve& curve) {
  if (p.kind != SingularPoint::Kind::Coordinate)
    throw std::invalid_argument("splitting bounds are implemented at coordinate points only");
  if (v == p.coord_index)
    throw std::invalid_argument(var_str(v) + " does not vanish at P" +
                                std::to_string(p.coord_index));
  if (curve.irreducible.verdict != Tri::Yes)
    throw std::invalid_argument("boundary curve C(" + var_str(v) + ") is not known irreducible");
  LocalizedCurve lc;
  lc.chart = chart_localize(curve.support, p.coord_index, p);
  lc.m = chart_multiplicity(lc.chart);
  if (lc.m < 1)
    throw std::invalid_argument("C(" + var_str(v) + ") does not pass through P" +
                                std::to_string(p.coord_index));
  return lc;
}

Rat residual_bound(const Surface& s, const SingularPoint& p, int v, Int m) {
  return Rat(BigInt(p.index) * s.ws.q[v] * s.ws.d, BigInt(m) * s.ws.pi);
}

}  // namespace

RefinedSplit refined_split_bound(const Surface& s, const SingularPoint& p, int v) {
  auto lc = localize_curve(s, p, v, boundary_curve(s, v));
  RefinedSplit r;
  r.v = v;
  r.m = lc.m;
  r.bprime = residual_bound(s, p, v, lc.m);
  r.value = std::max(make_rat(lc.m, s.ws.q[v]), r.bprime);
  return r;
}

LctPath lct_path(const Surface& s, const SingularPoint& p, int v, CertMode mode) {
  auto lc = localize_curve(s, p, v, boundary_curve(s, v));
  LctPath path;
  path.v = v;
  path.m = lc.m;
  path.bprime = residual_bound(s, p, v, lc.m);

  bool any_explicit = false;
  for (const auto& t : lc.chart.terms) any_explicit |= !t.generic_coeff;
  auto pts = lc.chart.points();

  if (any_explicit && lc.m >= 3) {
    path.known = false;  // degeneration beyond the supported strata
  } else if (lc.m == 2) {
    bool sq_a = false, mixed = false, sq_b = false;
    for (auto [a, b] : pts) {
      if (a + b != 2) continue;
      if (a == 2) sq_a = true;
      if (a == 1) mixed = true;
      if (a == 0) sq_b = true;
    }
    auto shear = [&]() {
      // On the coincident-tangent stratum the quadratic form is a perfect
      // square of a non-coordinate line; the shear sends it to z^2 exactly
      // and spreads every higher term.
      std::vector<std::pair<Int, Int>> out = {{0, 2}};
      for (auto [a, b] : pts) {
        if (a + b < 3) continue;
        for (Int j = 0; j <= b; ++j) out.emplace_back(a + j, b - j);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    };
    if (sq_a && mixed && sq_b) {
      path.branches.push_back({"tangent-cone (node)", pts, newton_lct(pts)});
      auto sh = shear();
      path.branches.push_back({"coincident-tangents (shear)", sh, newton_lct(sh)});
    } else if (mixed || (sq_a && sq_b)) {
      // The tangent directions are distinct for every admissible choice of
      // the surviving coefficients.
      path.branches.push_back({"tangent-cone (node)", pts, newton_lct(pts)});
    } else {
      path.branches.push_back({"newton-polygon", pts, newton_lct(pts)});
    }
  } else {
    path.branches.push_back({"newton-polygon", pts, newton_lct(pts)});
  }

  Rat ke_thr = make_rat(2, 3 * s.ws.q[v]);
  Rat tiger_thr = make_rat(1, s.ws.q[v]);
  path.pass = path.known && !path.branches.empty();
  for (const auto& br : path.branches) {
    bool ok;
    if (mode == CertMode::Ke) {
      ok = br.lct > ke_thr && path.bprime < make_rat(3, 2);
    } else {
      ok = (br.lct > tiger_thr || (br.lct == tiger_thr && s.ws.q[v] == 1)) &&
           path.bprime <= 1;
    }
    path.pass = path.pass && ok;
  }
  return path;
}

std::optional<std::string> tiger_witness(const Surface& s) {
  for (int v = 0; v < 4; ++v) {
    if (s.ws.q[v] != 1) continue;
    std::set<int> vars;
    for (int i = 0; i < 4; ++i)
      if (i != v) vars.insert(i);
    auto sup = s.support_in(vars);
    if (sup.empty()) continue;
    for (int i = 0; i < 4; ++i) {
      if (i == v || s.ws.q[i] <= 1 || !coordinate_point_on_surface(s, i)) continue;
      SingularPoint p;
      p.kind = SingularPoint::Kind::Coordinate;
      p.coord_index = i;
      p.index = s.ws.q[i];
      auto chart = chart_localize(sup, i, p);
      if (chart_multiplicity(chart) >= 2) return "(" + var_str(v) + "=0)";
    }
  }
  return std::nullopt;
}

std::string tiger_verdict_str(TigerVerdict v) {
  switch (v) {
    case TigerVerdict::Certified: return "no-tiger";
    case TigerVerdict::Witness: return "tiger-witness";
    default: return "unknown";
  }
}

std::string ke_verdict_str(KeVerdict v) {
  return v == KeVerdict::Certified ? "certified" : "inconclusive";
}

namespace {

void finalize_inapplicable(CertReport& r, const std::string& why) {
  r.applicable = false;
  r.inapplicable_reason = why;
  r.verdict.tiger = TigerVerdict::Unknown;
  r.verdict.ke = KeVerdict::Inconclusive;
  r.verdict.reasons.push_back(why);
}

}  // namespace

CertReport certify(const Surface& s) {
  CertReport r;
  r.surface = s;

  if (!s.ws.anticanonical()) {
    finalize_inapplicable(r, "degree " + std::to_string(s.ws.d) +
                                 " is not anticanonical (certification requires d = sum(q) - 1)");
    return r;
  }

  r.qs = check_quasismooth(s);
  if (!r.qs.pass()) {
    finalize_inapplicable(r, "quasi-smoothness conditions fail: " + r.qs.fail_summary());
    return r;
  }

  try {
    r.sing = singular_points(s);
  } catch (const NonIsolatedError& e) {
    finalize_inapplicable(r, e.what());
    return r;
  }

  for (int v = 0; v < 4; ++v) r.curves.push_back(boundary_info(s, v));
  r.smooth = smooth_point_certificate(s, r.curves);

  const Rat one(1);
  const Rat ke_bound = make_rat(3, 2);

  auto note_borderline = [&](const std::string& what, const Rat& val, const std::string& thr) {
    r.verdict.borderline.push_back(what + " = " + rat_str(val) + " (" + thr + ")");
  };

  for (const auto& p : r.sing) {
    SingularBound b;
    b.point = p;
    b.basic = estimate_3_7(s, p);
    b.effective = b.basic.value;

    if (p.kind == SingularPoint::Kind::Coordinate) {
      for (int v = 0; v < 4; ++v) {
        if (v == p.coord_index) continue;
        if (r.curves[v].curve.irreducible.verdict != Tri::Yes) continue;
        auto chart = chart_localize(r.curves[v].curve.support, p.coord_index, p);
        Int m = chart_multiplicity(chart);
        if (m < 1) continue;
        RefinedSplit cand;
        cand.v = v;
        cand.m = m;
        cand.bprime = residual_bound(s, p, v, m);
        cand.value = std::max(make_rat(m, s.ws.q[v]), cand.bprime);
        if (!b.refined || cand.value < b.refined->value) b.refined = cand;
      }
      if (b.refined && (!b.effective || b.refined->value < *b.effective))
        b.effective = b.refined->value;
    }

    b.tiger_ok = b.effective && *b.effective <= one;
    b.ke_ok = b.effective && *b.effective < ke_bound;

    if (!b.ke_ok && p.kind == SingularPoint::Kind::Coordinate) {
      for (int v = 0; v < 4; ++v) {
        if (v == p.coord_index) continue;
        if (r.curves[v].curve.irreducible.verdict != Tri::Yes) continue;
        auto chart = chart_localize(r.curves[v].curve.support, p.coord_index, p);
        if (chart_multiplicity(chart) < 1) continue;
        auto path = lct_path(s, p, v, CertMode::Ke);
        if (!b.lct || (path.pass && !b.lct->pass)) b.lct = path;
        if (path.pass) break;
      }
      if (b.lct && b.lct->pass) b.ke_ok = true;
    }

    if (b.effective && *b.effective == one)
      note_borderline("singular bound at " + p.label(), *b.effective, "no-tiger threshold 1/1");
    if (b.effective && *b.effective == ke_bound)
      note_borderline("singular bound at " + p.label(), *b.effective, "ke threshold 3/2");
    if (b.lct) {
      Rat ke_thr = make_rat(2, 3 * s.ws.q[b.lct->v]);
      for (const auto& br : b.lct->branches)
        if (br.lct == ke_thr)
          note_borderline("lct at " + p.label() + " via C(" + var_str(b.lct->v) + ")", br.lct,
                          "ke threshold " + rat_str(ke_thr));
    }

    if (!b.tiger_ok) {
      r.verdict.reasons.push_back("singular point " + p.label() + ": bound " +
                                  (b.effective ? rat_str(*b.effective) : std::string("unbounded")) +
                                  " not known <= 1");
    }
    if (!b.ke_ok) {
      std::string why = "singular point " + p.label() + ": bound " +
                        (b.effective ? rat_str(*b.effective) : std::string("unbounded")) +
                        " not < 3/2";
      if (b.lct) {
        why += "; threshold analysis fails (";
        for (size_t i = 0; i < b.lct->branches.size(); ++i) {
          if (i) why += "; ";
          why += b.lct->branches[i].label + " lct " + rat_str(b.lct->branches[i].lct);
        }
        why += ")";
      } else {
        why += "; no threshold analysis available";
      }
      r.verdict.reasons.push_back(why);
    }

    r.bounds.push_back(std::move(b));
  }

  bool smooth_tiger = r.smooth.feasible && r.smooth.overall && *r.smooth.overall < one;
  bool smooth_ke = r.smooth.feasible && r.smooth.overall && *r.smooth.overall < ke_bound;
  if (r.smooth.feasible && r.smooth.overall && *r.smooth.overall == one)
    note_borderline("smooth-point bound", *r.smooth.overall, "no-tiger threshold 1/1");
  if (!r.smooth.feasible) r.verdict.reasons.push_back(r.smooth.note);
  else if (!smooth_tiger)
    r.verdict.reasons.push_back("smooth-point bound " + rat_str(*r.smooth.overall) +
                                " not < 1");

  bool sing_tiger = true, sing_ke = true;
  for (const auto& b : r.bounds) {
    sing_tiger = sing_tiger && b.tiger_ok;
    sing_ke = sing_ke && b.ke_ok;
  }

  auto witness = tiger_witness(s);
  if (witness) r.verdict.witness = *witness;

  if (smooth_tiger && sing_tiger)
    r.verdict.tiger = TigerVerdict::Certified;
  else if (witness)
    r.verdict.tiger = TigerVerdict::Witness;
  else
    r.verdict.tiger = TigerVerdict::Unknown;

  if (r.verdict.tiger == TigerVerdict::Certified || (smooth_ke && sing_ke))
    r.verdict.ke = KeVerdict::Certified;
  else
    r.verdict.ke = KeVerdict::Inconclusive;

  if (s.zeroed.empty()) {
    r.verdict.assumptions.push_back("coefficients generic (nonzero and in general position)");
  } else {
    std::string z = "coefficients generic outside zeroed set {";
    for (size_t i = 0; i < s.zeroed.size(); ++i) {
      if (i) z += " ";
      z += monomial_str(s.zeroed[i]);
    }
    z += "}";
    r.verdict.assumptions.push_back(z);
  }
  for (const auto& p : r.sing)
    if (p.kind == SingularPoint::Kind::Line) {
      r.verdict.assumptions.push_back("line-point counts assume generic coefficients (distinct roots)");
      break;
    }
  for (const auto& b : r.bounds)
    if (b.lct && b.lct->branches.size() > 1) {
      r.verdict.assumptions.push_back(
          "tangent-direction strata analyzed separately: generic (node) and coincident (shear)");
      break;
    }
  r.verdict.assumptions.push_back(
      "irreducibility and curve smoothness decided by sufficient combinatorial criteria");

  // Internal consistency: these cannot fail for a sound engine.
  if (r.verdict.tiger == TigerVerdict::Certified && r.verdict.ke != KeVerdict::Certified)
    throw InternalCheckError("no-tiger verdict without ke verdict");
  if (witness && r.verdict.tiger == TigerVerdict::Certified)
    throw InternalCheckError("tiger witness on a surface certified tiger-free");
  for (const auto& b : r.bounds) {
    if (b.refined) {
      Rat at0 = b.refined->bprime;
      Rat at1 = make_rat(b.refined->m, s.ws.q[b.refined->v]);
      if (b.refined->value != std::max(at0, at1))
        throw InternalCheckError("refined split bound is not the max of the extremes");
    }
    if (b.basic.value && b.effective && *b.effective > *b.basic.value)
      throw InternalCheckError("effective singular bound exceeds the pair estimate");
  }

  return r;
}

}  // namespace wps
