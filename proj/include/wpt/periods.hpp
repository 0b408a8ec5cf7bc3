#pragma once

#include <vector>

#include "wpt/graph.hpp"
#include "wpt/polytope.hpp"

namespace wpt {

// Raised when an operation needs the distinguished cut system but the graph
// admits several of them: some branchpoint in the open upper half-plane is not
// hanging. `choices` is the total number of admissible cut systems (the
// product of the degrees of the upper branchpoints).
struct ExceptionalGraphError : GraphError {
  ExceptionalGraphError(const std::string& what, long long choices_)
      : GraphError(what), choices(choices_) {}
  long long choices = 1;
};

// The oriented boundary of the upper half-plane cut along the graph, walked
// from the left end of the axis to the right end. Every real vertical edge is
// traversed once and every upper vertical edge twice; lower edges never
// appear. Each vertex arrival is one visit; `crossings` counts, per vertical
// orbit, how many vertical traversals separate the visit from the right end,
// and `h` is the matching weighted sum (so the final visit always has h = 0).
struct BoundaryWalk {
  struct Visit {
    int vertex = -1;
    std::vector<int> crossings;
    Rat h;
  };
  std::vector<Visit> visits;
  std::vector<int> traversals;  // edge ids between consecutive visits
  std::vector<VerticalOrbit> orbits;
};

BoundaryWalk boundary_walk(const PlanarTree& tree, const WeightAssignment& weights);

// Boundary value of the height function at a vertex: the weighted crossing
// count between the vertex and the right end of the axis. Defined only when
// every visit of the vertex agrees on the value; otherwise throws GraphError.
Rat boundary_H(const PlanarTree& tree, const WeightAssignment& weights, int vertex);

struct SignedEdge {
  int edge = -1;
  int sign = +1;
};

// Trace of the distinguished cut system on the boundary walk. The cut system
// itself is never drawn; the period formulas only consume which real vertical
// edges form each real arc (with signs) and which upper branchpoints the
// consecutive cuts touch, in walk order from the right end.
struct CanonicalLabyrinthTrace {
  std::vector<std::vector<SignedEdge>> real_arcs;  // arc s = 0..k-1, left to right
  std::vector<int> touch_points;                   // s = k..g, ordered from the right end
  std::vector<std::vector<int>> touch_crossings;   // per-orbit crossings at each touch point
};

// Throws ExceptionalGraphError when the cut system is not unique.
CanonicalLabyrinthTrace labyrinth_trace(const PlanarTree& tree);

// Integer matrix of the period mapping on the weight-orbit coordinates:
// period s is row s applied to the orbit weight vector (columns follow
// vertical_orbits order). Rows 0..k-1 come from the real arcs, rows k..g from
// the touch points.
using PeriodMatrix = std::vector<std::vector<long long>>;
using PeriodVector = std::vector<Rat>;

PeriodMatrix period_matrix(const PlanarTree& tree);
PeriodVector period_map(const PlanarTree& tree, const WeightAssignment& weights);

// Closed image of the weight simplex under the period mapping, projected to
// the independent coordinates (the component count exceeds the image dimension
// by one because the components always sum to 2).
struct ImagePolytope {
  std::vector<int> kept;           // retained period indices, ascending
  std::vector<Vec> corner_images;  // image of each simplex corner, in orbit order
  std::vector<Vec> hull_vertices;  // extreme points of the hull, sorted
  HPolytope hull;
};

ImagePolytope image_polytope(const PlanarTree& tree);

// Recession cone of the width coordinates: one coordinate per saddle orbit,
// one inequality per horizontal edge (width at the tail, zero for non-saddle
// tails, stays below width at the head).
HPolytope width_cone(const PlanarTree& tree);

// Fiber of the period mapping over `target` inside one closed coordinate
// space, as a product of a weight-simplex section and the width cone. For a
// target on the image boundary the section lies in a proper simplex face; it
// is kept only when that face carries a top-dimensional fiber (the codimension
// of the face equals the codimension of its image) and lifts to an inner face
// (no two branchpoints merge when the zeroed edges collapse).
struct LocalFiber {
  struct Piece {
    std::vector<int> zero_orbits;  // orbit coordinates that vanish on the section
    HPolytope section;             // in weight-orbit coordinates
    int dim = 0;
  };
  bool boundary = false;     // target sits on the boundary of the closed image
  bool codim_match = false;  // the boundary face carries a top-dimensional fiber
  bool outer = false;        // the face lifts to the outer boundary
  std::vector<Piece> pieces;
  HPolytope cone;  // width factor, in saddle-orbit coordinates
};

LocalFiber local_fiber(const PlanarTree& tree, const PeriodVector& target);

}  // namespace wpt
