#include "wpt/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace wpt {

namespace {

// Incidence lists derived from the edge table (ground truth even when rotation
// data is inconsistent). Self-loops are skipped; they are flagged elsewhere.
std::vector<std::vector<int>> incident_edges(const PlanarTree& t) {
  std::vector<std::vector<int>> inc(t.vertex_count());
  for (int e = 0; e < t.edge_count(); ++e) {
    const auto& ed = t.edges[e];
    if (ed.a == ed.b) continue;
    inc[ed.a].push_back(e);
    inc[ed.b].push_back(e);
  }
  return inc;
}

bool cyclically_equal(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  const int n = static_cast<int>(x.size());
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = x[i] == y[(i + s) % n];
    if (ok) return true;
  }
  return false;
}

}  // namespace

int PlanarTree::other_end(int e, int v) const {
  const Edge& ed = edges.at(e);
  if (ed.a == v) return ed.b;
  if (ed.b == v) return ed.a;
  throw std::logic_error("edge is not incident to vertex");
}

int PlanarTree::vertical_degree(int v) const {
  int d = 0;
  for (const Edge& e : edges) {
    if (e.kind == EdgeKind::Vertical) d += (e.a == v) + (e.b == v);
  }
  return d;
}

int PlanarTree::incoming_degree(int v) const {
  int d = 0;
  for (const Edge& e : edges) {
    if (e.kind == EdgeKind::Horizontal && e.b == v) ++d;
  }
  return d;
}

int PlanarTree::outgoing_degree(int v) const {
  int d = 0;
  for (const Edge& e : edges) {
    if (e.kind == EdgeKind::Horizontal && e.a == v) ++d;
  }
  return d;
}

int ord(const PlanarTree& tree, int v) {
  return tree.vertical_degree(v) + 2 * tree.incoming_degree(v) - 2;
}

bool is_branchpoint(const PlanarTree& tree, int v) {
  return ord(tree, v) % 2 != 0;
}

GraphInvariants invariants(const PlanarTree& tree) {
  int total = 0;
  int real = 0;
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (!is_branchpoint(tree, v)) continue;
    ++total;
    if (tree.is_real(v)) ++real;
  }
  if (total % 2 != 0) {
    throw GraphError("odd number of branchpoints (" + std::to_string(total) + ")");
  }
  if (real % 2 != 0) {
    throw GraphError("odd number of on-axis branchpoints (" + std::to_string(real) + ")");
  }
  if (real < 2) {
    throw GraphError("graph has no on-axis branchpoints");
  }
  if (total < 2) {
    throw GraphError("graph has fewer than two branchpoints");
  }
  GraphInvariants inv;
  inv.genus = total / 2 - 1;
  inv.ovals = real / 2;
  return inv;
}

TopologyReport validate_topology(const PlanarTree& t) {
  TopologyReport r;
  auto fail = [&](bool TopologyReport::* flag, std::string msg) {
    r.*flag = false;
    r.messages.push_back(std::move(msg));
  };

  const int V = t.vertex_count();
  const int E = t.edge_count();
  if (V == 0) {
    fail(&TopologyReport::tree_ok, "graph has no vertices");
    return r;
  }
  if (static_cast<int>(t.rotation.size()) != V || static_cast<int>(t.sigma_v.size()) != V ||
      static_cast<int>(t.sigma_e.size()) != E) {
    throw GraphError("table sizes do not match vertex/edge counts");
  }
  for (const auto& e : t.edges) {
    if (e.a < 0 || e.a >= V || e.b < 0 || e.b >= V) {
      throw GraphError("edge endpoint out of range");
    }
  }
  for (const auto& rot : t.rotation) {
    for (int e : rot) {
      if (e < 0 || e >= E) throw GraphError("rotation entry out of range");
    }
  }
  for (int s : t.sigma_v) {
    if (s < 0 || s >= V) throw GraphError("vertex mirror entry out of range");
  }
  for (int s : t.sigma_e) {
    if (s < 0 || s >= E) throw GraphError("edge mirror entry out of range");
  }
  for (int v : t.real_order) {
    if (v < 0 || v >= V) throw GraphError("axis order entry out of range");
  }

  // Rotation tables must list exactly the incident edges of each vertex.
  bool tables_ok = true;
  const auto inc = incident_edges(t);
  for (int e = 0; e < E; ++e) {
    if (t.edges[e].a == t.edges[e].b) {
      fail(&TopologyReport::tree_ok, "edge " + std::to_string(e) + " is a self-loop");
      tables_ok = false;
    }
  }
  for (int v = 0; v < V; ++v) {
    std::vector<int> a = t.rotation[v];
    std::vector<int> b = inc[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      fail(&TopologyReport::tree_ok,
           "rotation at vertex " + std::to_string(v) + " does not list its incident edges");
      tables_ok = false;
    }
  }

  // T1: connected tree.
  if (E != V - 1) {
    fail(&TopologyReport::tree_ok, "edge count must be vertex count minus one");
  }
  {
    std::vector<char> seen(V, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int e : inc[v]) {
        const int w = t.other_end(e, v);
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          q.push(w);
        }
      }
    }
    if (reached != V) fail(&TopologyReport::tree_ok, "graph is not connected");
  }

  // Reflection data: involutions compatible with axis tags and edge endpoints.
  bool sigma_tables_ok = true;
  for (int v = 0; v < V; ++v) {
    if (t.sigma_v[t.sigma_v[v]] != v) {
      fail(&TopologyReport::symmetry_ok,
           "vertex mirror is not an involution at " + std::to_string(v));
      sigma_tables_ok = false;
    }
    const Axis a = t.vertices[v].axis;
    const Axis b = t.vertices[t.sigma_v[v]].axis;
    if (a == Axis::Real) {
      if (t.sigma_v[v] != v) {
        fail(&TopologyReport::symmetry_ok,
             "reflection must fix on-axis vertex " + std::to_string(v));
        sigma_tables_ok = false;
      }
    } else {
      const Axis want = (a == Axis::Upper) ? Axis::Lower : Axis::Upper;
      if (t.sigma_v[v] == v || b != want) {
        fail(&TopologyReport::symmetry_ok,
             "reflection must exchange the half-planes at vertex " + std::to_string(v));
        sigma_tables_ok = false;
      }
    }
  }
  for (int e = 0; e < E; ++e) {
    const int se = t.sigma_e[e];
    if (t.sigma_e[se] != e) {
      fail(&TopologyReport::symmetry_ok, "edge mirror is not an involution at " + std::to_string(e));
      sigma_tables_ok = false;
      continue;
    }
    const auto& ed = t.edges[e];
    const auto& md = t.edges[se];
    if (md.kind != ed.kind) {
      fail(&TopologyReport::symmetry_ok,
           "mirror of edge " + std::to_string(e) + " has a different kind");
      sigma_tables_ok = false;
    }
    if (ed.kind == EdgeKind::Horizontal) {
      if (md.a != t.sigma_v[ed.a] || md.b != t.sigma_v[ed.b]) {
        fail(&TopologyReport::symmetry_ok,
             "mirror of edge " + std::to_string(e) + " is not the reflected edge");
        sigma_tables_ok = false;
      }
    } else {
      const bool same = md.a == t.sigma_v[ed.a] && md.b == t.sigma_v[ed.b];
      const bool swapped = md.a == t.sigma_v[ed.b] && md.b == t.sigma_v[ed.a];
      if (!same && !swapped) {
        fail(&TopologyReport::symmetry_ok,
             "mirror of edge " + std::to_string(e) + " is not the reflected edge");
        sigma_tables_ok = false;
      }
    }
    if (se == e) {
      if (!t.is_real(ed.a) || !t.is_real(ed.b)) {
        fail(&TopologyReport::symmetry_ok,
             "self-mirrored edge " + std::to_string(e) + " must lie on the axis");
        sigma_tables_ok = false;
      }
    }
  }

  // The axis: real vertices listed once each, consecutive ones adjacent, and
  // every edge between two real vertices joining consecutive ones.
  {
    std::vector<int> reals;
    for (int v = 0; v < V; ++v) {
      if (t.is_real(v)) reals.push_back(v);
    }
    std::vector<int> listed = t.real_order;
    std::sort(listed.begin(), listed.end());
    if (reals.empty()) {
      fail(&TopologyReport::symmetry_ok, "graph has no on-axis vertices");
    } else if (listed != reals ||
               std::adjacent_find(listed.begin(), listed.end()) != listed.end()) {
      fail(&TopologyReport::symmetry_ok, "axis order must list each on-axis vertex exactly once");
    } else {
      std::vector<int> pos(V, -1);
      for (int i = 0; i < static_cast<int>(t.real_order.size()); ++i) {
        pos[t.real_order[i]] = i;
      }
      for (std::size_t i = 0; i + 1 < t.real_order.size(); ++i) {
        const int u = t.real_order[i];
        const int w = t.real_order[i + 1];
        bool adjacent = false;
        for (int e : inc[u]) {
          if (t.other_end(e, u) == w) adjacent = true;
        }
        if (!adjacent) {
          fail(&TopologyReport::symmetry_ok,
               "consecutive on-axis vertices " + std::to_string(u) + " and " + std::to_string(w) +
                   " are not adjacent");
        }
      }
      for (int e = 0; e < E; ++e) {
        const auto& ed = t.edges[e];
        if (ed.a == ed.b) continue;
        if (t.is_real(ed.a) && t.is_real(ed.b)) {
          if (std::abs(pos[ed.a] - pos[ed.b]) != 1) {
            fail(&TopologyReport::symmetry_ok,
                 "on-axis edge " + std::to_string(e) + " must join consecutive on-axis vertices");
          }
        }
      }

      // Local embedding symmetry. Off-axis vertices: the mirror rotation is the
      // reversed, mirrored list. On-axis vertices: the rotation must split into
      // right edge, upper edges, left edge, lower edges, with uppers and lowers
      // mirror-paired in opposite order.
      if (tables_ok && sigma_tables_ok) {
        for (int v = 0; v < V; ++v) {
          if (t.is_real(v)) continue;
          const int s = t.sigma_v[v];
          if (v > s) continue;
          std::vector<int> want;
          for (int e : t.rotation[v]) want.push_back(t.sigma_e[e]);
          std::reverse(want.begin(), want.end());
          if (!cyclically_equal(want, t.rotation[s])) {
            fail(&TopologyReport::symmetry_ok,
                 "rotations at mirrored vertices " + std::to_string(v) + " and " +
                     std::to_string(s) + " are incompatible");
          }
        }
        for (int v : t.real_order) {
          const int i = pos[v];
          int right = -1, left = -1;
          if (i + 1 < static_cast<int>(t.real_order.size())) {
            const int w = t.real_order[i + 1];
            for (int e : inc[v]) {
              if (t.other_end(e, v) == w) right = e;
            }
          }
          if (i > 0) {
            const int w = t.real_order[i - 1];
            for (int e : inc[v]) {
              if (t.other_end(e, v) == w) left = e;
            }
          }
          const auto& rot = t.rotation[v];
          const int n = static_cast<int>(rot.size());
          auto cls = [&](int idx) -> char {
            const int e = rot[((idx % n) + n) % n];
            if (e == right) return 'R';
            if (e == left) return 'L';
            const int o = t.other_end(e, v);
            if (t.is_upper(o)) return 'u';
            if (t.is_lower(o)) return 'l';
            return 'x';  // another on-axis vertex: flagged above
          };
          bool local_ok = true;
          std::vector<int> uppers, lowers;
          if (n > 0) {
            int start = -1;
            if (right >= 0) {
              for (int j = 0; j < n; ++j) {
                if (rot[j] == right) start = j;
              }
              int j = start + 1;
              while (j < start + n && cls(j) == 'u') {
                uppers.push_back(rot[j % n]);
                ++j;
              }
              if (left >= 0) {
                if (j < start + n && rot[j % n] == left) {
                  ++j;
                } else {
                  local_ok = false;
                }
              }
              while (j < start + n && cls(j) == 'l') {
                lowers.push_back(rot[j % n]);
                ++j;
              }
              if (j != start + n) local_ok = false;
            } else if (left >= 0) {
              for (int j = 0; j < n; ++j) {
                if (rot[j] == left) start = j;
              }
              int j = start + 1;
              while (j < start + n && cls(j) == 'l') {
                lowers.push_back(rot[j % n]);
                ++j;
              }
              while (j < start + n && cls(j) == 'u') {
                uppers.push_back(rot[j % n]);
                ++j;
              }
              if (j != start + n) local_ok = false;
            } else {
              // No axis edges: uppers must be one contiguous arc, lowers the other.
              int transitions = 0;
              for (int j = 0; j < n; ++j) {
                if (cls(j) != 'u' && cls(j) != 'l') local_ok = false;
                if (cls(j) != cls(j + 1)) ++transitions;
              }
              if (local_ok && transitions > 2) local_ok = false;
              if (local_ok) {
                int s0 = 0;
                if (transitions == 2) {
                  for (int j = 0; j < n; ++j) {
                    if (cls(j) == 'l' && cls(j + 1) == 'u') s0 = j + 1;
                  }
                }
                for (int j = s0; j < s0 + n; ++j) {
                  if (cls(j) == 'u') {
                    uppers.push_back(rot[j % n]);
                  } else {
                    lowers.push_back(rot[j % n]);
                  }
                }
              }
            }
          }
          if (local_ok) {
            if (uppers.size() != lowers.size()) {
              local_ok = false;
            } else {
              const int p = static_cast<int>(uppers.size());
              for (int j = 0; j < p; ++j) {
                if (t.sigma_e[uppers[j]] != lowers[p - 1 - j]) local_ok = false;
              }
            }
          }
          if (!local_ok) {
            fail(&TopologyReport::symmetry_ok,
                 "rotation at on-axis vertex " + std::to_string(v) + " is not split by the axis");
          }
        }
      }
    }
  }

  // T2 and T3 need trustworthy rotation tables.
  if (tables_ok) {
    for (int v = 0; v < V; ++v) {
      const auto& rot = t.rotation[v];
      const int n = static_cast<int>(rot.size());
      std::vector<int> outs;
      for (int j = 0; j < n; ++j) {
        const auto& ed = t.edges[rot[j]];
        if (ed.kind == EdgeKind::Horizontal && ed.a == v) outs.push_back(j);
      }
      if (!outs.empty()) {
        const int m = static_cast<int>(outs.size());
        for (int j = 0; j < m; ++j) {
          const int cur = outs[j];
          const int nxt = outs[(j + 1) % m];
          const int gap = ((nxt - cur - 1) % n + n) % n;
          if (gap == 0) {
            fail(&TopologyReport::separation_ok,
                 "outgoing ends at vertex " + std::to_string(v) +
                     " are not separated by a vertical or incoming end");
            break;
          }
        }
      }
      if (ord(t, v) == 0) {
        const bool has_vertical = t.vertical_degree(v) > 0;
        const bool has_horizontal = t.incoming_degree(v) + t.outgoing_degree(v) > 0;
        if (!has_vertical || !has_horizontal) {
          fail(&TopologyReport::flat_vertex_ok,
               "vertex " + std::to_string(v) +
                   " has multiplicity zero but lacks a vertical or horizontal edge");
        }
      }
    }
  }

  return r;
}

WeightReport validate_weights(const PlanarTree& t, const WeightAssignment& w, WeightMode mode) {
  const int V = t.vertex_count();
  const int E = t.edge_count();
  for (const auto& [e, h] : w.H) {
    (void)h;
    if (e < 0 || e >= E) throw GraphError("H entry for unknown edge " + std::to_string(e));
    if (t.edges[e].kind != EdgeKind::Vertical) {
      throw GraphError("H entry for non-vertical edge " + std::to_string(e));
    }
  }
  for (int e = 0; e < E; ++e) {
    if (t.edges[e].kind == EdgeKind::Vertical && !w.H.count(e)) {
      throw GraphError("missing H value for vertical edge " + std::to_string(e));
    }
  }
  for (const auto& [v, x] : w.W) {
    if (v < 0 || v >= V) throw GraphError("W entry for unknown vertex " + std::to_string(v));
    if (t.in_vertical_part(v) && x != 0) {
      throw GraphError("nonzero W value on vertex " + std::to_string(v) +
                       " of the vertical part");
    }
  }
  for (int v = 0; v < V; ++v) {
    if (t.is_saddle(v) && !w.W.count(v)) {
      throw GraphError("missing W value for saddle vertex " + std::to_string(v));
    }
  }

  auto width = [&](int v) -> Rat {
    if (t.in_vertical_part(v)) return Rat(0);
    return w.W.at(v);
  };

  WeightReport r;
  auto fail = [&](bool WeightReport::* flag, std::string msg) {
    r.*flag = false;
    r.messages.push_back(std::move(msg));
  };

  Rat total = 0;
  for (int e = 0; e < E; ++e) {
    const auto& ed = t.edges[e];
    if (ed.kind == EdgeKind::Vertical) {
      const Rat& h = w.H.at(e);
      total += h;
      if (mode == WeightMode::Strict ? h <= 0 : h < 0) {
        fail(&WeightReport::positivity_ok,
             "vertical edge " + std::to_string(e) + " has weight " + format_rat(h));
      }
      if (h != w.H.at(t.sigma_e[e])) {
        if (e < t.sigma_e[e]) {
          fail(&WeightReport::symmetry_ok,
               "mirrored vertical edges " + std::to_string(e) + " and " +
                   std::to_string(t.sigma_e[e]) + " have different weights");
        }
      }
    } else {
      const Rat wa = width(ed.a);
      const Rat wb = width(ed.b);
      if (mode == WeightMode::Strict ? !(wa < wb) : !(wa <= wb)) {
        fail(&WeightReport::monotone_ok,
             "width does not grow along horizontal edge " + std::to_string(e));
      }
    }
  }
  for (int v = 0; v < V; ++v) {
    if (!t.is_saddle(v)) continue;
    const int s = t.sigma_v[v];
    if (v < s && width(v) != width(s)) {
      fail(&WeightReport::symmetry_ok, "mirrored saddles " + std::to_string(v) + " and " +
                                           std::to_string(s) + " have different widths");
    }
  }
  if (total != 1) {
    fail(&WeightReport::normalized_ok,
         "total vertical weight is " + format_rat(total) + ", expected 1");
  }
  return r;
}

namespace {

class KeyBuilder {
 public:
  KeyBuilder(const PlanarTree& t, const WeightAssignment* w) : t_(t), w_(w) {}

  std::string run() {
    if (t_.real_order.empty()) {
      throw GraphError("canonical form requires at least one on-axis vertex");
    }
    const int root = t_.real_order.front();
    vertex_token(root);
    for (int e : root_child_order(root)) {
      emit_subtree(e, root);
    }
    return out_.str();
  }

 private:
  // Children of the leftmost on-axis vertex, counterclockwise from the
  // incoming direction of the axis (angle pi): lower edges, the rightward
  // axis edge, then upper edges.
  std::vector<int> root_child_order(int root) const {
    const auto& rot = t_.rotation[root];
    const int n = static_cast<int>(rot.size());
    if (n == 0) return {};
    int right = -1;
    if (t_.real_order.size() > 1) {
      const int w = t_.real_order[1];
      for (int e : rot) {
        if (t_.other_end(e, root) == w) right = e;
      }
      if (right < 0) throw GraphError("canonical form requires a validated tree");
    }
    std::vector<int> uppers, lowers;
    if (right >= 0) {
      int start = 0;
      for (int j = 0; j < n; ++j) {
        if (rot[j] == right) start = j;
      }
      int j = start + 1;
      for (; j < start + n; ++j) {
        const int o = t_.other_end(rot[j % n], root);
        if (!t_.is_upper(o)) break;
        uppers.push_back(rot[j % n]);
      }
      for (; j < start + n; ++j) {
        const int o = t_.other_end(rot[j % n], root);
        if (!t_.is_lower(o)) throw GraphError("canonical form requires a validated tree");
        lowers.push_back(rot[j % n]);
      }
    } else {
      auto side = [&](int j) {
        const int o = t_.other_end(rot[((j % n) + n) % n], root);
        if (t_.is_upper(o)) return 'u';
        if (t_.is_lower(o)) return 'l';
        throw GraphError("canonical form requires a validated tree");
      };
      int s0 = 0;
      for (int j = 0; j < n; ++j) {
        if (side(j) == 'l' && side(j + 1) == 'u') s0 = j + 1;
      }
      for (int j = s0; j < s0 + n; ++j) {
        if (side(j) == 'u') {
          uppers.push_back(rot[j % n]);
        } else {
          lowers.push_back(rot[j % n]);
        }
      }
    }
    std::vector<int> order = lowers;
    if (right >= 0) order.push_back(right);
    order.insert(order.end(), uppers.begin(), uppers.end());
    return order;
  }

  void emit_subtree(int e, int from) {
    out_ << '(';
    edge_token(e, from);
    const int v = t_.other_end(e, from);
    vertex_token(v);
    const auto& rot = t_.rotation[v];
    const int n = static_cast<int>(rot.size());
    int pos = -1;
    for (int j = 0; j < n; ++j) {
      if (rot[j] == e) pos = j;
    }
    if (pos < 0) throw GraphError("canonical form requires a validated tree");
    for (int j = 1; j < n; ++j) {
      emit_subtree(rot[(pos + j) % n], v);
    }
    out_ << ')';
  }

  void vertex_token(int v) {
    switch (t_.vertices[v].axis) {
      case Axis::Real:
        out_ << 'R';
        break;
      case Axis::Upper:
        out_ << 'U';
        break;
      case Axis::Lower:
        out_ << 'L';
        break;
    }
    if (w_ != nullptr && t_.is_saddle(v)) {
      auto it = w_->W.find(v);
      if (it == w_->W.end()) throw GraphError("missing W value for saddle vertex");
      out_ << "[w=" << format_rat(it->second) << "]";
    }
  }

  void edge_token(int e, int from) {
    const auto& ed = t_.edges[e];
    if (ed.kind == EdgeKind::Vertical) {
      out_ << 'V';
      if (w_ != nullptr) {
        auto it = w_->H.find(e);
        if (it == w_->H.end()) throw GraphError("missing H value for vertical edge");
        out_ << "[h=" << format_rat(it->second) << "]";
      }
    } else {
      out_ << (ed.a == from ? '>' : '<');
    }
  }

  const PlanarTree& t_;
  const WeightAssignment* w_;
  std::ostringstream out_;
};

}  // namespace

std::string canonical_form(const PlanarTree& tree) {
  return KeyBuilder(tree, nullptr).run();
}

std::string canonical_form_weighted(const PlanarTree& tree, const WeightAssignment& weights) {
  return KeyBuilder(tree, &weights).run();
}

PlanarTree mirror(const PlanarTree& tree) {
  PlanarTree m = tree;
  for (auto& rot : m.rotation) std::reverse(rot.begin(), rot.end());
  std::reverse(m.real_order.begin(), m.real_order.end());
  return m;
}

std::vector<VerticalOrbit> vertical_orbits(const PlanarTree& t) {
  std::vector<VerticalOrbit> res;
  std::vector<char> seen(t.edge_count(), 0);
  for (int e = 0; e < t.edge_count(); ++e) {
    if (t.edges[e].kind != EdgeKind::Vertical || seen[e]) continue;
    const int se = t.sigma_e[e];
    if (se == e) {
      res.push_back({e, true});
      seen[e] = 1;
    } else {
      const auto& ed = t.edges[e];
      const bool upper = t.is_upper(ed.a) || t.is_upper(ed.b);
      res.push_back({upper ? e : se, false});
      seen[e] = 1;
      seen[se] = 1;
    }
  }
  std::sort(res.begin(), res.end(),
            [](const VerticalOrbit& x, const VerticalOrbit& y) {
              return x.representative < y.representative;
            });
  return res;
}

std::vector<int> saddle_orbit_representatives(const PlanarTree& t) {
  std::vector<int> res;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (!t.is_saddle(v)) continue;
    if (t.is_lower(v)) continue;
    res.push_back(v);
  }
  return res;
}

int dim_coordinate_space(const PlanarTree& tree) {
  return static_cast<int>(vertical_orbits(tree).size()) - 1 +
         static_cast<int>(saddle_orbit_representatives(tree).size());
}

}  // namespace wpt
