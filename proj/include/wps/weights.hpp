#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wps/rational.hpp"

namespace wps {

// Weights of a weighted projective 3-space together with the degree of the
// hypersurface under study.  Invariants: q sorted ascending, every triple of
// weights coprime, pi = q0*q1*q2*q3.
struct WeightSystem {
  std::array<Int, 4> q{};
  Int d = 0;
  Int pi = 0;

  Int weight_sum() const { return q[0] + q[1] + q[2] + q[3]; }
  // Largest degree keeping the anticanonical class ample: d = sum(q) - 1.
  bool anticanonical() const { return d == weight_sum() - 1; }
  bool operator==(const WeightSystem&) const = default;
};

// Sorts the weights, checks that every triple of weights has gcd 1 and
// defaults the degree to the anticanonical value sum(q)-1.
// Throws std::invalid_argument on a violated assumption.
WeightSystem normalize_weights(const std::array<Int, 4>& raw,
                               std::optional<Int> degree = std::nullopt);

// normalize_weights plus the permutation that sorted the input, so callers
// can carry companion data (exponent vectors) along.
struct NormalizedInput {
  WeightSystem ws;
  std::array<int, 4> perm{};  // perm[k] = index into raw of sorted slot k
  bool reordered = false;
};
NormalizedInput normalize_weights_with_perm(const std::array<Int, 4>& raw,
                                            std::optional<Int> degree = std::nullopt);

struct Monomial {
  std::array<Int, 4> e{};

  Int degree(const WeightSystem& ws) const {
    return e[0] * ws.q[0] + e[1] * ws.q[1] + e[2] * ws.q[2] + e[3] * ws.q[3];
  }
  bool involves(int var) const { return e[var] > 0; }
  int active_vars() const {
    return (e[0] > 0) + (e[1] > 0) + (e[2] > 0) + (e[3] > 0);
  }
  auto operator<=>(const Monomial&) const = default;
};

// "x0^7*x2", "x3^2", "1"
std::string monomial_str(const Monomial& m);

// All monomials of the given weighted degree using only the allowed
// variables, in descending lexicographic order on exponent vectors.
std::vector<Monomial> enumerate_monomials(const WeightSystem& ws, Int degree,
                                          const std::set<int>& support = {0, 1, 2, 3});

// Degree pairing O_X(a).O_X(b) = a*b*d / (q0 q1 q2 q3), exact.
Rat intersection_number(const WeightSystem& ws, Int a, Int b);

}  // namespace wps
