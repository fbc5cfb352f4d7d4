#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wps/chart.hpp"
#include "wps/quasismooth.hpp"
#include "wps/singular.hpp"
#include "wps/surface.hpp"

namespace wps {

enum class CertMode { Tiger, Ke };

// A breach of a certified internal invariant; mapped to exit code 2 by the
// command-line front end.
struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

// Separating linear system: |O(l)| separates a point with x_avoid != 0 from
// finitely many chosen points modulo the divisor (x_avoid = 0), under the
// finite-fiber projection away from P_projection.
struct SeparatingStrategy {
  int avoid = -1;
  int projection = -1;
  Int l = 0;
  Rat bound;  // l*d/pi
};

// Minimal l <= pi such that both indices outside {avoid, projection} admit
// at least two monomials x_avoid^a * x_i^b of degree l; nullopt if none.
// Throws std::invalid_argument when no pure power x_projection^m of degree d
// exists (the projection may have an infinite fiber).
std::optional<Int> separating_degree(const Surface& s, int avoid, int projection);

// Classification and bound data for the boundary curve C_v.
struct BoundaryInfo {
  int v = -1;
  BoundaryCurve curve;
  Rat cap;            // d / (product of the other three weights)
  Rat value;          // max(1/q_v, cap)
  bool degree_ok = false;
  bool available = false;  // irreducible + smooth outside Sing X + degree_ok
};
BoundaryInfo boundary_info(const Surface& s, int v);

struct LeftoverPoint {
  std::string label;
  bool singular = false;
  Int count = 1;
  bool line = false;  // points on a coordinate line rather than a vertex
};

// A cover of the smooth locus by separating strategies (x_v != 0) and
// boundary bounds (x_v = 0), with the uncovered coordinate-plane
// intersections verified to consist of singular points only.
struct SmoothCertificate {
  std::vector<SeparatingStrategy> strategies;
  std::vector<int> boundaries_used;
  std::vector<LeftoverPoint> leftover;
  bool leftover_pass = false;
  bool feasible = false;
  std::optional<Rat> overall;
  std::string note;
};
SmoothCertificate smooth_point_certificate(const Surface& s);
SmoothCertificate smooth_point_certificate(const Surface& s,
                                           const std::vector<BoundaryInfo>& curves);

struct PairEstimateTrace {
  SingularPoint::Chart chart;
  Rat value;
};
// Pair-system estimate at a singular point: minimum over admissible chart
// pairs of d/(min(q_j,q_k)*q_l), stabilizer-corrected at line points.
// No admissible pair yields an empty value (an unbounded estimate).
struct EstimateResult {
  std::optional<Rat> value;
  std::vector<PairEstimateTrace> pairs;
};
EstimateResult estimate_3_7(const Surface& s, const SingularPoint& p);

// Splitting D = alpha*C_v + (1 - q_v*alpha)*D' at a coordinate singular
// point: m is the chart multiplicity of C_v, bprime the residual estimate,
// value the worst of the two extremes of the affine bound in alpha.
struct RefinedSplit {
  int v = -1;
  Int m = 0;
  Rat bprime;
  Rat value;  // max(m/q_v, bprime)
};
RefinedSplit refined_split_bound(const Surface& s, const SingularPoint& p, int v);

// Threshold analysis of the chart curve of C_v at a coordinate singular
// point.  Each branch covers one coefficient stratum: the generic member
// and, when the multiplicity-2 lowest form admits it, the
// coincident-tangent degeneration handled by an exact shear.
struct LctBranch {
  std::string label;  // "tangent-cone (node)", "newton-polygon", "coincident-tangents (shear)"
  std::vector<std::pair<Int, Int>> support;
  Rat lct;
};
struct LctPath {
  int v = -1;
  Int m = 0;
  Rat bprime;
  std::vector<LctBranch> branches;
  bool known = true;  // false: degeneration beyond the supported strata
  bool pass = false;  // all branches pass the requested mode's thresholds
};
LctPath lct_path(const Surface& s, const SingularPoint& p, int v, CertMode mode);

// (x_v = 0) with q_v = 1 is a tiger as soon as its chart multiplicity at
// some coordinate singular point is at least 2.  Absence of a witness is
// not a proof of absence.
std::optional<std::string> tiger_witness(const Surface& s);

struct SingularBound {
  SingularPoint point;
  EstimateResult basic;
  std::optional<RefinedSplit> refined;
  std::optional<LctPath> lct;
  std::optional<Rat> effective;  // min(basic, refined)
  bool tiger_ok = false;
  bool ke_ok = false;
};

enum class TigerVerdict { Certified, Witness, Unknown };
enum class KeVerdict { Certified, Inconclusive };

struct Verdict {
  TigerVerdict tiger = TigerVerdict::Unknown;
  std::string witness;  // e.g. "(x0=0)"
  KeVerdict ke = KeVerdict::Inconclusive;
  std::vector<std::string> assumptions;
  std::vector<std::string> borderline;
  std::vector<std::string> reasons;
};

struct CertReport {
  Surface surface;
  bool applicable = true;
  std::string inapplicable_reason;
  QuasiSmoothReport qs;
  std::vector<SingularPoint> sing;
  std::vector<BoundaryInfo> curves;
  SmoothCertificate smooth;
  std::vector<SingularBound> bounds;
  Verdict verdict;
};

// Full pipeline.  No-tiger requires the smooth bound strictly below 1 and
// every singular bound at most 1; the Kaehler-Einstein criterion accepts
// strict 3/2 bounds or a passing threshold analysis.  Inapplicability
// (quasi-smoothness failure, non-isolated singularities, non-anticanonical
// degree) is reported, not thrown.
CertReport certify(const Surface& s);

std::string tiger_verdict_str(TigerVerdict v);
std::string ke_verdict_str(KeVerdict v);

}  // namespace wps
