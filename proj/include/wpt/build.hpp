#pragma once

#include <vector>

#include "wpt/graph.hpp"

namespace wpt {

// Declarative construction of reflection-symmetric planar trees.
//
// A script describes the upper closed half-plane only: the on-axis vertices
// from left to right, the single edge in each gap between consecutive on-axis
// vertices, and for each on-axis vertex an ordered list of upper subtrees.
// The lower half is generated as the mirror image.

struct UpperNode {
  // Edge joining this node to its parent, seen from the parent:
  // Vertical, OutEdge (parent is the tail), or InEdge (parent is the head).
  enum class Link { Vertical, OutEdge, InEdge };
  Link link = Link::Vertical;
  // Counterclockwise order starting just after the parent edge.
  std::vector<UpperNode> children;
};

struct AxisVertex {
  // Upper subtrees in counterclockwise order: first entry closest to the
  // rightward axis direction, last entry closest to the leftward direction.
  std::vector<UpperNode> uppers;
};

enum class AxisLink {
  VerticalEdge,   // unoriented, carries a weight
  RightwardEdge,  // horizontal, width grows to the right
  LeftwardEdge,   // horizontal, width grows to the left
};

struct AxisScript {
  std::vector<AxisVertex> axis;  // left to right; must be nonempty
  std::vector<AxisLink> links;   // size axis.size() - 1
};

struct AssembledTree {
  PlanarTree tree;
  std::vector<int> axis_vertices;  // ids, left to right
  std::vector<int> axis_edges;     // ids, left to right
  // upper_vertices[i][d] / upper_edges[i][d]: preorder ids of decoration d of
  // axis vertex i (upper half only; edge j joins node j to its parent).
  std::vector<std::vector<std::vector<int>>> upper_vertices;
  std::vector<std::vector<std::vector<int>>> upper_edges;
};

AssembledTree assemble(const AxisScript& script);

// Copies every H and W value onto the mirror edge/vertex when absent, and
// checks that explicitly given pairs agree.
void symmetrize_weights(const PlanarTree& tree, WeightAssignment& weights);

}  // namespace wpt
