#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpt/graph.hpp"

namespace wpt {

// Enumeration of the weighted-tree strata for a fixed genus and oval count.
//
// Graphs are generated from axis scripts (on-axis sequence plus upper
// decorations), restricted to shapes whose strict weight space is nonempty
// (the head of every horizontal edge is a saddle). Two routes select the
// output set and must agree on the top-dimensional strata:
//   - default: keep graphs with coordinate-space dimension exactly 2g;
//   - stable_only: keep graphs all of whose vertices belong to the stable
//     vertex vocabulary, with no dimension condition.
// all_dims disables both filters and returns every stratum.

struct EnumerateOptions {
  int genus = 2;
  int ovals = 1;
  bool all_dims = false;
  bool stable_only = false;
};

struct EnumeratedGraph {
  PlanarTree tree;
  int dim = 0;
  std::string key;  // canonical form; output is sorted by this key
};

std::vector<EnumeratedGraph> enumerate_graphs(const EnumerateOptions& opt);

// Local vertex shapes occurring in top-dimensional strata. The first three
// may appear anywhere (off the axis, or on it in a mirror-symmetric form);
// the remaining kinds exist only on the symmetry axis. Ends are abbreviated
// v (vertical), i (incoming horizontal), o (outgoing horizontal).
enum class StableVertexKind {
  HangingVertical,       // [v] — end of a column, a branchpoint
  VerticalWithOutgoing,  // [v,v,o] — column interior feeding one outgoing end
  TwoIncoming,           // [i,i] — saddle collecting two incoming ends
  AxisCross,             // [v,v] on the axis + a vertical stub pair
  AxisBranchWithOut,     // [v,o] both along the axis
  AxisChainWithOutPair,  // [v,v] on the axis + an outgoing stub pair
  AxisStubsWithOutPair,  // outgoing axis ends both sides + a vertical stub pair
  AxisSaddleWithOutPair, // outgoing axis ends both sides + an incoming pair
  AxisSaddleWithOut,     // one outgoing axis end + an incoming pair
};

// Classification of a vertex against the vocabulary, or nullopt when the
// vertex shape does not occur in any top-dimensional stratum.
std::optional<StableVertexKind> classify_stable_vertex(const PlanarTree& tree, int v);

// Canonical cyclic signature of the end types at a vertex, prefixed by the
// axis tag; used to audit the vocabulary.
std::string vertex_shape(const PlanarTree& tree, int v);

}  // namespace wpt
