#pragma once

#include <set>
#include <string>
#include <vector>

#include "wps/weights.hpp"

namespace wps {

// A member of |O(d)| with symbolic coefficients: either fully generic, or
// generic with a listed subset of basis monomials set to exactly zero.
// Coefficients are never sampled; genericity is a tag consumed by the
// combinatorial criteria.
struct Surface {
  WeightSystem ws;
  std::vector<Monomial> zeroed;  // sorted ascending, subset of the degree-d basis

  bool generic() const { return zeroed.empty(); }
  bool is_zeroed(const Monomial& m) const;

  // Degree-d basis minus the zeroed set, in canonical (descending lex) order.
  std::vector<Monomial> support() const;
  // Support monomials using only the given variables.
  std::vector<Monomial> support_in(const std::set<int>& vars) const;
  bool has_monomial_in(const std::set<int>& vars) const;
  // x_i^m of degree d present (not zeroed)?
  bool has_pure_power(int i) const;

  std::string label() const;  // "X_25 in P(3,5,7,11)"
};

// Validates that every zeroed monomial has weighted degree d.
// Throws std::invalid_argument otherwise.
Surface make_surface(const WeightSystem& ws, std::vector<Monomial> zeroed = {});

}  // namespace wps
