#pragma once

#include <map>
#include <string>
#include <vector>

#include "p3d/graph3d.hpp"

namespace p3d {

// Monotone curve between the dots of strands P and Q (P before Q), with the
// side (+1 above, -1 below) of every dot strictly inside its bounding box.
struct Curve {
  int P = -1, Q = -1;
  std::map<int, int> side;
};

using Multicurve = std::vector<Curve>;

struct PropagationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RelativeCycle {
  int d = 0;
  bool frozen = false;
  std::vector<Multicurve> curves;  // curves[r] = multicurve at time r, r = 0..d-1
  std::vector<int> cuts;           // crossings whose bridge cut a curve
  std::vector<int> chain;          // coefficient per edge of the graph
};

// side of strand s relative to curve k at time c: +1 above, -1 below, 0 undefined
int curve_side(const Graph3D& g, int c, const Curve& k, int s);
bool curve_valid(const Graph3D& g, int c, const Curve& k);

RelativeCycle propagate(const Graph3D& g, int d);
std::vector<RelativeCycle> all_cycles(const Graph3D& g);

// permutation obtained by replacing the dots of the multicurve with the outer
// corners of its skew shape
Perm sigma(const Graph3D& g, int c, const Multicurve& mc);

// 1 if the multicurve at time c crosses the horizontal line y = h + 1/2 (h > 0)
// or the vertical line x = |h| + 1/2 (h < 0)
int disk_membership(const Graph3D& g, const RelativeCycle& cyc, int c, int h);

// vertices of the chain's boundary with multiplicity
std::map<int, int> chain_boundary(const Graph3D& g, const std::vector<int>& chain);

// signed count of crossings of two cycles on the ribbon surface; the second
// cycle must be closed
int intersection(const Graph3D& g, const std::vector<int>& a, const std::vector<int>& b);

// P[c][d] = signed traversals of the bridge at J[d] by cycle J[c]
std::vector<std::vector<int>> bridge_pairing(const Graph3D& g, const std::vector<RelativeCycle>& cycles);

struct CycleCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// sigma against the APS, disk membership against the order table, boundary
// shape, and unitriangularity of the bridge pairing
CycleCheck check_cycles(const Graph3D& g, const std::vector<RelativeCycle>& cycles);

}  // namespace p3d
