#include "wpt/build.hpp"

#include <functional>

namespace wpt {

namespace {

struct NodeRec {
  int parent_vertex = -1;            // axis id or upper id
  UpperNode::Link link = UpperNode::Link::Vertical;
  std::vector<int> children;         // preorder indices of child records
};

}  // namespace

AssembledTree assemble(const AxisScript& script) {
  const int n = static_cast<int>(script.axis.size());
  if (n == 0) throw GraphError("axis script must have at least one on-axis vertex");
  if (static_cast<int>(script.links.size()) != n - 1) {
    throw GraphError("axis script needs one link per gap between on-axis vertices");
  }

  AssembledTree out;
  out.upper_vertices.resize(n);
  out.upper_edges.resize(n);

  // Record upper nodes in global preorder; ids are derived from the position:
  // vertex id = n + r, edge-to-parent id = (n - 1) + r.
  std::vector<NodeRec> recs;
  std::function<int(const UpperNode&, int, std::vector<int>&, std::vector<int>&)> visit =
      [&](const UpperNode& node, int parent_vertex, std::vector<int>& vid_log,
          std::vector<int>& eid_log) -> int {
    const int r = static_cast<int>(recs.size());
    recs.push_back({parent_vertex, node.link, {}});
    vid_log.push_back(n + r);
    eid_log.push_back(n - 1 + r);
    for (const UpperNode& child : node.children) {
      const int c = visit(child, n + r, vid_log, eid_log);
      recs[r].children.push_back(c);
    }
    return r;
  };
  std::vector<std::vector<int>> deco_roots(n);  // record indices of decoration roots
  for (int i = 0; i < n; ++i) {
    for (const UpperNode& deco : script.axis[i].uppers) {
      out.upper_vertices[i].emplace_back();
      out.upper_edges[i].emplace_back();
      deco_roots[i].push_back(
          visit(deco, i, out.upper_vertices[i].back(), out.upper_edges[i].back()));
    }
  }
  const int U = static_cast<int>(recs.size());

  PlanarTree t;
  t.vertices.resize(n + 2 * U);
  t.edges.resize((n - 1) + 2 * U);
  t.rotation.resize(n + 2 * U);
  t.sigma_v.resize(n + 2 * U);
  t.sigma_e.resize((n - 1) + 2 * U);

  for (int i = 0; i < n; ++i) {
    t.vertices[i].axis = Axis::Real;
    t.sigma_v[i] = i;
    t.real_order.push_back(i);
  }
  for (int r = 0; r < U; ++r) {
    t.vertices[n + r].axis = Axis::Upper;
    t.vertices[n + U + r].axis = Axis::Lower;
    t.sigma_v[n + r] = n + U + r;
    t.sigma_v[n + U + r] = n + r;
  }

  // Axis edges.
  for (int i = 0; i + 1 < n; ++i) {
    PlanarTree::Edge& e = t.edges[i];
    switch (script.links[i]) {
      case AxisLink::VerticalEdge:
        e.kind = EdgeKind::Vertical;
        e.a = i;
        e.b = i + 1;
        break;
      case AxisLink::RightwardEdge:
        e.kind = EdgeKind::Horizontal;
        e.a = i;
        e.b = i + 1;
        break;
      case AxisLink::LeftwardEdge:
        e.kind = EdgeKind::Horizontal;
        e.a = i + 1;
        e.b = i;
        break;
    }
    t.sigma_e[i] = i;
    out.axis_edges.push_back(i);
  }
  out.axis_vertices = t.real_order;

  // Upper edges and their mirrors.
  auto mirror_vertex = [&](int v) { return t.sigma_v[v]; };
  for (int r = 0; r < U; ++r) {
    const NodeRec& rec = recs[r];
    const int e_up = (n - 1) + r;
    const int e_lo = e_up + U;
    const int child = n + r;
    PlanarTree::Edge& up = t.edges[e_up];
    PlanarTree::Edge& lo = t.edges[e_lo];
    switch (rec.link) {
      case UpperNode::Link::Vertical:
        up.kind = EdgeKind::Vertical;
        up.a = rec.parent_vertex;
        up.b = child;
        break;
      case UpperNode::Link::OutEdge:
        up.kind = EdgeKind::Horizontal;
        up.a = rec.parent_vertex;
        up.b = child;
        break;
      case UpperNode::Link::InEdge:
        up.kind = EdgeKind::Horizontal;
        up.a = child;
        up.b = rec.parent_vertex;
        break;
    }
    lo.kind = up.kind;
    lo.a = mirror_vertex(up.a);
    lo.b = mirror_vertex(up.b);
    t.sigma_e[e_up] = e_lo;
    t.sigma_e[e_lo] = e_up;
  }

  // Rotations of upper nodes and their mirrors.
  for (int r = 0; r < U; ++r) {
    const NodeRec& rec = recs[r];
    std::vector<int>& up = t.rotation[n + r];
    up.push_back((n - 1) + r);
    for (int c : rec.children) up.push_back((n - 1) + c);
    std::vector<int>& lo = t.rotation[n + U + r];
    lo.push_back((n - 1) + r + U);
    for (auto it = rec.children.rbegin(); it != rec.children.rend(); ++it) {
      lo.push_back((n - 1) + *it + U);
    }
  }

  // Rotations of on-axis vertices: rightward axis edge, upper decoration
  // roots, leftward axis edge, mirrored decoration roots in reverse.
  for (int i = 0; i < n; ++i) {
    std::vector<int>& rot = t.rotation[i];
    if (i + 1 < n) rot.push_back(i);
    for (int root : deco_roots[i]) rot.push_back((n - 1) + root);
    if (i > 0) rot.push_back(i - 1);
    for (auto it = deco_roots[i].rbegin(); it != deco_roots[i].rend(); ++it) {
      rot.push_back((n - 1) + *it + U);
    }
  }

  out.tree = std::move(t);
  return out;
}

void symmetrize_weights(const PlanarTree& tree, WeightAssignment& weights) {
  for (int e = 0; e < tree.edge_count(); ++e) {
    const int se = tree.sigma_e[e];
    auto it = weights.H.find(e);
    if (it == weights.H.end()) continue;
    auto jt = weights.H.find(se);
    if (jt == weights.H.end()) {
      weights.H.emplace(se, it->second);
    } else if (jt->second != it->second) {
      throw GraphError("conflicting weights on mirrored edges " + std::to_string(e) + " and " +
                       std::to_string(se));
    }
  }
  for (int v = 0; v < tree.vertex_count(); ++v) {
    const int sv = tree.sigma_v[v];
    auto it = weights.W.find(v);
    if (it == weights.W.end()) continue;
    auto jt = weights.W.find(sv);
    if (jt == weights.W.end()) {
      weights.W.emplace(sv, it->second);
    } else if (jt->second != it->second) {
      throw GraphError("conflicting widths on mirrored vertices " + std::to_string(v) + " and " +
                       std::to_string(sv));
    }
  }
}

}  // namespace wpt
