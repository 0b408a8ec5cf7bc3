#include "support/catalog.hpp"

#include <algorithm>

namespace wpt::cat {

Example g2k3_chains() {
  AxisScript s;
  s.axis.resize(8);
  s.links = {AxisLink::VerticalEdge,  AxisLink::RightwardEdge, AxisLink::LeftwardEdge,
             AxisLink::VerticalEdge,  AxisLink::RightwardEdge, AxisLink::LeftwardEdge,
             AxisLink::VerticalEdge};
  Example ex;
  ex.tree = assemble(s).tree;
  ex.weights.H = {{0, Rat(1, 6)}, {3, Rat(1, 3)}, {6, Rat(1, 2)}};
  ex.weights.W = {{2, Rat(1, 4)}, {5, Rat(3, 4)}};
  return ex;
}

Example g2k2_left_column() {
  AxisScript s;
  s.axis.resize(7);
  s.axis[0].uppers = {UpperNode{UpperNode::Link::Vertical, {}}};
  s.links = {AxisLink::RightwardEdge, AxisLink::LeftwardEdge, AxisLink::VerticalEdge,
             AxisLink::RightwardEdge, AxisLink::LeftwardEdge, AxisLink::VerticalEdge};
  Example ex;
  ex.tree = assemble(s).tree;
  ex.weights.H = {{2, Rat(1, 4)}, {5, Rat(1, 4)}, {6, Rat(1, 4)}, {7, Rat(1, 4)}};
  ex.weights.W = {{1, Rat(1, 3)}, {4, Rat(2, 3)}};
  return ex;
}

PlanarTree relabel(const PlanarTree& t, const std::vector<int>& vperm,
                   const std::vector<int>& eperm) {
  const int V = t.vertex_count();
  const int E = t.edge_count();
  PlanarTree r;
  r.vertices.resize(V);
  r.edges.resize(E);
  r.rotation.resize(V);
  r.sigma_v.resize(V);
  r.sigma_e.resize(E);
  for (int v = 0; v < V; ++v) r.vertices[vperm[v]] = t.vertices[v];
  for (int e = 0; e < E; ++e) {
    PlanarTree::Edge ed = t.edges[e];
    ed.a = vperm[ed.a];
    ed.b = vperm[ed.b];
    r.edges[eperm[e]] = ed;
  }
  for (int v = 0; v < V; ++v) {
    std::vector<int> rot;
    for (int e : t.rotation[v]) rot.push_back(eperm[e]);
    if (!rot.empty()) {
      std::rotate(rot.begin(), rot.begin() + vperm[v] % rot.size(), rot.end());
    }
    r.rotation[vperm[v]] = std::move(rot);
  }
  for (int v = 0; v < V; ++v) r.sigma_v[vperm[v]] = vperm[t.sigma_v[v]];
  for (int e = 0; e < E; ++e) r.sigma_e[eperm[e]] = eperm[t.sigma_e[e]];
  for (int v : t.real_order) r.real_order.push_back(vperm[v]);
  return r;
}

}  // namespace wpt::cat
