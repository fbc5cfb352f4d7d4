#include "wps/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wps {

WeightSystem normalize_weights(const std::array<Int, 4>& raw, std::optional<Int> degree) {
  return normalize_weights_with_perm(raw, degree).ws;
}

NormalizedInput normalize_weights_with_perm(const std::array<Int, 4>& raw,
                                            std::optional<Int> degree) {
  for (Int w : raw)
    if (w <= 0) throw std::invalid_argument("weights must be positive");

  NormalizedInput out;
  std::array<int, 4> idx{0, 1, 2, 3};
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return raw[a] < raw[b]; });
  out.perm = idx;
  for (int k = 0; k < 4; ++k) {
    out.ws.q[k] = raw[idx[k]];
    if (idx[k] != k) out.reordered = true;
  }

  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) {
        Int g = std::gcd(std::gcd(out.ws.q[i], out.ws.q[j]), out.ws.q[k]);
        if (g > 1) {
          std::ostringstream os;
          os << "triple (" << out.ws.q[i] << "," << out.ws.q[j] << "," << out.ws.q[k]
             << ") has gcd " << g;
          throw std::invalid_argument(os.str());
        }
      }

  out.ws.d = degree ? *degree : out.ws.weight_sum() - 1;
  if (out.ws.d <= 0) throw std::invalid_argument("degree must be positive");
  out.ws.pi = out.ws.q[0] * out.ws.q[1] * out.ws.q[2] * out.ws.q[3];
  return out;
}

std::string monomial_str(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << i;
    if (m.e[i] > 1) os << "^" << m.e[i];
    first = false;
  }
  if (first) return "1";
  return os.str();
}

namespace {

void enumerate_rec(const WeightSystem& ws, const std::set<int>& support, int var,
                   Int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == 4) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (!support.count(var)) {
    cur.e[var] = 0;
    enumerate_rec(ws, support, var + 1, remaining, cur, out);
    return;
  }
  for (Int a = remaining / ws.q[var]; a >= 0; --a) {
    cur.e[var] = a;
    enumerate_rec(ws, support, var + 1, remaining - a * ws.q[var], cur, out);
  }
  cur.e[var] = 0;
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const WeightSystem& ws, Int degree,
                                          const std::set<int>& support) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<Monomial> out;
  Monomial cur;
  enumerate_rec(ws, support, 0, degree, cur, out);
  return out;
}

Rat intersection_number(const WeightSystem& ws, Int a, Int b) {
  return Rat(BigInt(a) * b * ws.d, BigInt(ws.pi));
}

}  // namespace wps
