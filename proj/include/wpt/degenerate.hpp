#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpt/graph.hpp"
#include "wpt/polytope.hpp"

namespace wpt {

// Raised when a requested degeneration would merge two branchpoints (zero
// graph distance). Such faces of a coordinate space lie on the outer boundary
// of the moduli cell and carry no subordinate graph of the same component.
struct OuterFaceError : GraphError {
  using GraphError::GraphError;
};

// The tree with d(V) - 2*d_out(V) outgoing rays-to-infinity added at each
// vertex, one in every rotation gap between consecutive non-outgoing ends
// that contains no outgoing edge. Outgoing ends (edges and rays together)
// then alternate with the other ends. Rays are encoded as negative entries
// -(k+1) in the per-vertex rotation; nonnegative entries are edge ids.
struct ExtendedGraph {
  PlanarTree base;
  std::vector<std::vector<int>> rotation;
  int ray_count = 0;
};

ExtendedGraph extend(const PlanarTree& tree);

// Boundary walks of the complement faces of the extension. Each face runs
// from one ray to the next: the sequence holds the starting ray code, the
// traversed edge ids, and the closing ray code. Every face is a half-strip
// holding exactly one vertical edge for the graphs this project works with.
std::vector<std::vector<int>> extended_faces(const ExtendedGraph& ext);

// One half-strip bounded by a vertical edge: the two bounding horizontal
// chains, listed outward from the edge's endpoints, with their width values.
struct Strip {
  int vertical_edge = -1;
  struct Wall {
    std::vector<int> vertices;
    std::vector<int> edges;
    std::vector<Rat> widths;
  };
  Wall from_a;  // chain leaving the tail-slot endpoint `a` of the edge record
  Wall from_b;  // chain leaving the other endpoint
};

// The two half-strips supported by a vertical edge, recomputed from a fresh
// extension on every call.
std::vector<Strip> strips_of(const PlanarTree& tree, const WeightAssignment& weights,
                             int vertical_edge);

// Result of a zero-weight elimination: the quotient graph with its weights
// and the surjections from the input ids. Removed edges map to -1; an edge
// absorbed into a glued chain maps to the chain edge nearest its lower end.
struct Reduction {
  PlanarTree tree;
  WeightAssignment weights;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

// Contract a horizontal edge of zero width increment (and its mirror image).
// Throws GraphError when the increment is nonzero, OuterFaceError when the
// merged vertex class would contain two branchpoints.
Reduction contract(const PlanarTree& tree, const WeightAssignment& weights, int edge);

// Collapse the two half-strips supported by a vertical edge of zero weight
// (and its mirror image): opposite-side points of equal width are identified,
// horizontals leaving for infinity disappear, and zero-increment horizontals
// on the strip sides are contracted first as a byproduct. Requires positive
// graph distance between all branchpoint pairs.
Reduction zip(const PlanarTree& tree, const WeightAssignment& weights, int edge);

// Apply contractions and zippings until the weights satisfy the strict
// axioms. The outcome does not depend on the elimination order.
Reduction reduce(const PlanarTree& tree, const WeightAssignment& weights);

// One codimension-1 face of a coordinate space: either a vertical-orbit
// coordinate set to zero (possibly subdivided into cells by the relative
// order of the side widths of the collapsing strips) or one width-cone facet
// tightened to equality.
struct FaceDescriptor {
  std::vector<int> zero_orbits;                      // orbit coordinates vanishing on the face
  std::vector<std::pair<int, int>> width_equalities; // horizontal edges (tail, head) flat on the face
  std::vector<std::pair<int, int>> width_order;      // saddle reps (p, q) with W(p) < W(q) carving the cell
  bool inner = false;
  std::string outer_reason;
  std::optional<PlanarTree> subordinate;             // reduced graph, for inner faces
  std::optional<WeightAssignment> sample;            // boundary sample realizing the face
  int dim = -1;                                      // coordinate-space dimension of the subordinate
};

// All codimension-1 faces, classified by reducing a generic sample in the
// relative interior of each face (or pattern cell).
std::vector<FaceDescriptor> face_lattice(const PlanarTree& tree);

}  // namespace wpt
