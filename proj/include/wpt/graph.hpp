#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpt/rational.hpp"

namespace wpt {

// Domain error raised by graph operations whose preconditions fail in a way
// that has meaning for the caller (as opposed to programming errors, which use
// the standard logic-error types).
struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Axis { Real, Upper, Lower };
enum class EdgeKind { Vertical, Horizontal };

// A planar tree with a reflection symmetry across the horizontal axis.
//
// Vertices and edges are identified by dense indices. The embedding is stored
// combinatorially: a counterclockwise rotation (cyclic list of incident edge
// ids) per vertex plus the left-to-right order of the on-axis vertices.
// Horizontal edges are oriented tail -> head (the direction along which the
// width function grows); vertical edges are unoriented and carry a weight.
struct PlanarTree {
  struct Vertex {
    Axis axis = Axis::Real;
  };
  struct Edge {
    EdgeKind kind = EdgeKind::Vertical;
    int a = -1;  // tail for horizontal edges
    int b = -1;  // head for horizontal edges
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rotation;  // per-vertex CCW cyclic edge list
  std::vector<int> sigma_v;                // reflection on vertices
  std::vector<int> sigma_e;                // reflection on edges
  std::vector<int> real_order;             // on-axis vertices, left to right

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  bool is_real(int v) const { return vertices.at(v).axis == Axis::Real; }
  bool is_upper(int v) const { return vertices.at(v).axis == Axis::Upper; }
  bool is_lower(int v) const { return vertices.at(v).axis == Axis::Lower; }

  int other_end(int e, int v) const;

  int degree(int v) const { return static_cast<int>(rotation.at(v).size()); }
  int vertical_degree(int v) const;
  int incoming_degree(int v) const;
  int outgoing_degree(int v) const;

  // True when the vertex touches a vertical edge (its width value is pinned
  // to zero); vertices with no vertical edge are called saddles and carry a
  // free width value.
  bool in_vertical_part(int v) const { return vertical_degree(v) > 0; }
  bool is_saddle(int v) const { return vertical_degree(v) == 0; }
};

// Exact rational weights: H on vertical edges (units of pi) and W on vertices.
struct WeightAssignment {
  std::map<int, Rat> H;
  std::map<int, Rat> W;
};

enum class WeightMode { Strict, Weak };

struct GraphInvariants {
  int genus = 0;
  int ovals = 0;
  friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

// Per-axiom validation outcome. `messages` holds one line per failed check.
struct TopologyReport {
  bool tree_ok = true;        // connected tree, consistent incidence tables
  bool symmetry_ok = true;    // reflection involution and axis embedding
  bool separation_ok = true;  // outgoing horizontal ends separated
  bool flat_vertex_ok = true; // order-zero vertices touch both edge kinds
  std::vector<std::string> messages;
  bool pass() const { return tree_ok && symmetry_ok && separation_ok && flat_vertex_ok; }
};

struct WeightReport {
  bool monotone_ok = true;    // width grows along horizontal edges
  bool positivity_ok = true;  // vertical weights positive (nonnegative in weak mode)
  bool symmetry_ok = true;    // weights invariant under the reflection
  bool normalized_ok = true;  // total vertical weight equals 1 (units of pi)
  std::vector<std::string> messages;
  bool pass() const {
    return monotone_ok && positivity_ok && symmetry_ok && normalized_ok;
  }
};

// Multiplicity of a vertex in the divisor of the underlying quadratic
// differential: vertical degree + 2 * incoming degree - 2.
int ord(const PlanarTree& tree, int v);

// A vertex is a branchpoint exactly when its multiplicity is odd.
bool is_branchpoint(const PlanarTree& tree, int v);

// Genus and number of real ovals, derived from branchpoint counts.
// Throws GraphError when the counts cannot come from a curve.
GraphInvariants invariants(const PlanarTree& tree);

TopologyReport validate_topology(const PlanarTree& tree);

WeightReport validate_weights(const PlanarTree& tree, const WeightAssignment& weights,
                              WeightMode mode);

// Total-order key for isotopy classes (isotopies of the plane commuting with
// the reflection and preserving the axis orientation). Computed by a rooted
// traversal from the leftmost on-axis vertex; independent of id labels.
std::string canonical_form(const PlanarTree& tree);

// Canonical key of the weighted graph: the same traversal with the exact H/W
// values embedded at the matching positions.
std::string canonical_form_weighted(const PlanarTree& tree, const WeightAssignment& weights);

// The mirror image across the vertical axis: left and right are exchanged,
// the upper half-plane stays the upper half-plane.
PlanarTree mirror(const PlanarTree& tree);

// --- quotient helpers (upper closed half-plane modulo the reflection) ---

// One orbit of the reflection acting on vertical edges: either a single
// on-axis edge or an upper/lower pair represented by the upper edge id.
struct VerticalOrbit {
  int representative = -1;  // on-axis edge id, or the upper edge of the pair
  bool on_axis = false;
};

// Orbits sorted by representative id. Order is deterministic and is the
// coordinate order of the weight simplex used throughout.
std::vector<VerticalOrbit> vertical_orbits(const PlanarTree& tree);

// Representatives of saddle-vertex orbits in the closed upper half-plane
// (on-axis saddles and one vertex per upper/lower pair), sorted by id.
std::vector<int> saddle_orbit_representatives(const PlanarTree& tree);

// dim of the weight simplex plus dim of the width cone:
// (#vertical orbits - 1) + (#saddle orbits).
int dim_coordinate_space(const PlanarTree& tree);

}  // namespace wpt
