#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wps/surface.hpp"

namespace wps {

enum class Tri { Yes, No, Unknown };

// Witness-carrying report for the three combinatorial conditions that make
// the general member quasi-smooth (I, II) and keep it away from the singular
// lines of the ambient space (III).
struct QuasiSmoothReport {
  struct ItemI {
    int i = -1;
    bool ok = false;
    Monomial witness;  // x_i^m * x_j (j may equal i)
  };
  struct ItemII {
    int i = -1, j = -1;
    bool ok = false;
    bool via_two_var = false;      // single monomial in x_i, x_j
    Monomial witness_a, witness_b; // two_var witness, or the x_k / x_l pair
  };
  struct ItemIII {
    int i = -1, j = -1;
    bool ok = false;
    Monomial witness;
  };

  bool condI = false, condII = false, condIII = false;
  std::vector<ItemI> itemsI;
  std::vector<ItemII> itemsII;
  std::vector<ItemIII> itemsIII;

  bool pass() const { return condI && condII && condIII; }
  std::string fail_summary() const;
  std::string flags() const;  // "YYY", "YNY", ...
};

QuasiSmoothReport check_quasismooth(const Surface& s);

struct Irreducibility {
  Tri verdict = Tri::Unknown;
  Int components = 0;  // meaningful when verdict == No
  bool operator==(const Irreducibility&) const = default;
};

// Decides irreducibility of the generic member with the given monomial
// support by exponent geometry: a support whose exponent vectors are not
// collinear and share no common factor has irreducible generic member; a
// collinear support of primitive length L splits into L components.
// Sufficient-only; Unknown otherwise.
Irreducibility curve_irreducible(const std::vector<Monomial>& support);

// The restriction C_v = X o (x_v = 0) with its classification.
struct BoundaryCurve {
  int v = -1;
  std::vector<Monomial> support;
  Irreducibility irreducible;
  Tri smooth_outside_sing = Tri::Unknown;
  Int degree_class = 0;  // C_v is in |O_X(q_v)|
};

// Quasi-smoothness of the generic curve away from the singular points of X:
// base-point-free off coordinate strata plus per-variable witnesses at the
// smooth coordinate points.  Returns Yes or Unknown, never No.
Tri curve_smooth_outside_sing(const Surface& s, int v);

BoundaryCurve boundary_curve(const Surface& s, int v);

}  // namespace wps
