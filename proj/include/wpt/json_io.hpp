#pragma once

#include <optional>
#include <string>

#include "wpt/graph.hpp"

namespace wpt {

// JSON document layout:
//   {
//     "vertices": [{"id": 0, "axis": "real"|"upper"|"lower"}, ...],
//     "edges":    [{"id": 0, "kind": "v", "ends": [a, b]},
//                  {"id": 1, "kind": "h", "ends": [a, b], "head": b}, ...],
//     "rotation": {"0": [edgeId, ...], ...},   // counterclockwise
//     "mirror":   {"v": {"0": 0, ...}, "e": {"0": 0, ...}},
//     "H":        {"edgeId": "p/q", ...},      // optional, vertical edges
//     "W":        {"vertexId": "p/q", ...}     // optional
//   }
// Ids must be dense and equal to the array positions. The left-to-right order
// of the on-axis vertices is the order of their entries in "vertices" (all
// documents produced by this library list them first). Rationals are "p" or
// "p/q" strings; plain JSON integers are also accepted on input.

struct GraphDocument {
  PlanarTree tree;
  std::optional<WeightAssignment> weights;
};

GraphDocument parse_graph_json(const std::string& text);
GraphDocument load_graph(const std::string& path);

std::string to_json(const PlanarTree& tree, const WeightAssignment* weights = nullptr);
void save_graph(const std::string& path, const PlanarTree& tree,
                const WeightAssignment* weights = nullptr);

// Standalone weight file: {"H": {...}, "W": {...}} with ids referring to the
// accompanying graph document.
WeightAssignment parse_weights_json(const std::string& text, const PlanarTree& tree);
WeightAssignment load_weights(const std::string& path, const PlanarTree& tree);
std::string weights_to_json(const WeightAssignment& weights);

}  // namespace wpt
