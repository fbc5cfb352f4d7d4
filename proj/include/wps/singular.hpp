#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "wps/surface.hpp"

namespace wps {

// A singular line of the ambient space lies inside X, so the singularities of
// X are not isolated and the multiplicity criteria do not apply.
struct NonIsolatedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An isolated quotient singularity of X: either a coordinate point P_i, or
// the (generic) batch of points cut out on a singular line of the ambient
// space.  `charts` lists the admissible (chart, transverse pair, remaining
// index) triples usable by the pair-estimate.
struct SingularPoint {
  enum class Kind { Coordinate, Line };

  struct Chart {
    int chart = -1;
    std::array<int, 2> pair{-1, -1};
    int remaining = -1;
  };

  Kind kind = Kind::Coordinate;
  int coord_index = -1;              // Coordinate: the i of P_i
  std::array<int, 2> vanishing{-1, -1};  // Line: the two coordinates that vanish
  Int index = 1;                     // order of the local quotient group
  Int count = 1;                     // Line: generic number of such points
  std::vector<Chart> charts;

  std::string label() const;  // "P3" or "(x1=x2=0)"
  bool operator==(const SingularPoint&) const = default;
};

// True iff P_i lies on X, i.e. no pure power x_i^m of degree d survives in
// the support.
bool coordinate_point_on_surface(const Surface& s, int i);

// All coordinate points on X with index q_i > 1 plus, for every weight pair
// with gcd g > 1, the line points of index g.  The line-point count is the
// generic value (a_max - a_min)/step computed from the restricted support;
// it assumes distinct roots.  Throws NonIsolatedError when a singular line
// lies inside X.
std::vector<SingularPoint> singular_points(const Surface& s);

}  // namespace wps
