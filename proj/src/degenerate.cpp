#include "wpt/degenerate.hpp"

#include "wpt/periods.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wpt {

namespace {

std::string joined(const std::vector<std::string>& messages) {
  std::string out;
  for (const auto& m : messages) {
    if (!out.empty()) out += "; ";
    out += m;
  }
  return out;
}

void require_valid_tree(const PlanarTree& t, const char* op) {
  TopologyReport rep = validate_topology(t);
  if (!rep.pass())
    throw GraphError(std::string(op) + ": invalid graph: " + joined(rep.messages));
}

void require_weak(const PlanarTree& t, const WeightAssignment& w, const char* op) {
  WeightReport rep = validate_weights(t, w, WeightMode::Weak);
  if (!rep.pass())
    throw GraphError(std::string(op) + ": weights fail the weak axioms: " + joined(rep.messages));
}

// A quotient that is structurally sound but violates the separation or
// flat-vertex axioms is a limit that no graph of the family can represent
// (for instance a horizontal chain pushed onto an end of the real axis), so
// the degeneration leads out of the component rather than deeper into it.
void require_valid_result(const PlanarTree& t, const char* op) {
  TopologyReport rep = validate_topology(t);
  if (rep.pass()) return;
  if (rep.tree_ok && rep.symmetry_ok)
    throw OuterFaceError(std::string(op) + ": quotient leaves the family: " +
                         joined(rep.messages));
  throw GraphError(std::string(op) + ": invalid graph: " + joined(rep.messages));
}

Rat width_of(const PlanarTree& t, const WeightAssignment& w, int v) {
  if (t.in_vertical_part(v)) return Rat(0);
  auto it = w.W.find(v);
  if (it == w.W.end())
    throw GraphError("missing width for saddle vertex " + std::to_string(v));
  return it->second;
}

Rat h_of(const WeightAssignment& w, int e) {
  auto it = w.H.find(e);
  if (it == w.H.end())
    throw GraphError("missing height for vertical edge " + std::to_string(e));
  return it->second;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Throws OuterFaceError when two branchpoints sit at graph distance zero,
// i.e. are joined by a path of zero-weight edges (zero heights and zero
// width increments).
void check_branchpoint_distances(const PlanarTree& t, const WeightAssignment& w) {
  Dsu dsu(t.vertex_count());
  for (int e = 0; e < t.edge_count(); ++e) {
    const auto& ed = t.edges[e];
    bool zero = false;
    if (ed.kind == EdgeKind::Vertical) {
      zero = h_of(w, e) == 0;
    } else {
      zero = width_of(t, w, ed.a) == width_of(t, w, ed.b);
    }
    if (zero) dsu.unite(ed.a, ed.b);
  }
  std::map<int, int> bp_count;
  for (int v = 0; v < t.vertex_count(); ++v)
    if (is_branchpoint(t, v)) ++bp_count[dsu.find(v)];
  for (const auto& [root, count] : bp_count)
    if (count >= 2)
      throw OuterFaceError("branchpoints at zero graph distance: " + std::to_string(count) +
                           " in one zero-weight component");
}

Reduction identity_reduction(const PlanarTree& t, const WeightAssignment& w) {
  Reduction r;
  r.tree = t;
  r.weights = w;
  r.vertex_map.resize(t.vertex_count());
  std::iota(r.vertex_map.begin(), r.vertex_map.end(), 0);
  r.edge_map.resize(t.edge_count());
  std::iota(r.edge_map.begin(), r.edge_map.end(), 0);
  return r;
}

Reduction compose(Reduction first, const Reduction& second) {
  Reduction out;
  out.tree = second.tree;
  out.weights = second.weights;
  out.vertex_map.resize(first.vertex_map.size());
  for (std::size_t v = 0; v < first.vertex_map.size(); ++v)
    out.vertex_map[v] = second.vertex_map[first.vertex_map[v]];
  out.edge_map.resize(first.edge_map.size());
  for (std::size_t e = 0; e < first.edge_map.size(); ++e) {
    int mid = first.edge_map[e];
    out.edge_map[e] = mid < 0 ? -1 : second.edge_map[mid];
  }
  return out;
}

// Single-edge contraction without mirror handling: internal building block.
Reduction contract_one(const PlanarTree& t, const WeightAssignment& w, int e) {
  const int V = t.vertex_count();
  const int E = t.edge_count();
  const int a0 = t.edges[e].a;
  const int b0 = t.edges[e].b;
  int keep = a0, drop = b0;
  if (!t.is_real(keep) && t.is_real(drop)) std::swap(keep, drop);

  Reduction r;
  r.vertex_map.assign(V, -1);
  r.edge_map.assign(E, -1);
  int nv = 0;
  for (int v = 0; v < V; ++v)
    if (v != drop) r.vertex_map[v] = nv++;
  r.vertex_map[drop] = r.vertex_map[keep];
  int ne = 0;
  for (int i = 0; i < E; ++i)
    if (i != e) r.edge_map[i] = ne++;

  PlanarTree& out = r.tree;
  out.vertices.resize(nv);
  for (int v = 0; v < V; ++v)
    if (v != drop) out.vertices[r.vertex_map[v]].axis = t.vertices[v].axis;
  if (t.is_real(a0) || t.is_real(b0))
    out.vertices[r.vertex_map[keep]].axis = Axis::Real;
  out.edges.resize(ne);
  for (int i = 0; i < E; ++i) {
    if (i == e) continue;
    auto& ed = out.edges[r.edge_map[i]];
    ed.kind = t.edges[i].kind;
    ed.a = r.vertex_map[t.edges[i].a];
    ed.b = r.vertex_map[t.edges[i].b];
  }

  out.rotation.assign(nv, {});
  auto arc_after = [&](int v) {
    const auto& rot = t.rotation[v];
    const int n = static_cast<int>(rot.size());
    int pos = -1;
    for (int j = 0; j < n; ++j)
      if (rot[j] == e) pos = j;
    std::vector<int> res;
    for (int j = 1; j < n; ++j) res.push_back(r.edge_map[rot[(pos + j) % n]]);
    return res;
  };
  for (int v = 0; v < V; ++v) {
    if (v == keep || v == drop) continue;
    auto& rr = out.rotation[r.vertex_map[v]];
    rr.reserve(t.rotation[v].size());
    for (int x : t.rotation[v]) rr.push_back(r.edge_map[x]);
  }
  {
    std::vector<int> merged = arc_after(keep);
    std::vector<int> tail = arc_after(drop);
    merged.insert(merged.end(), tail.begin(), tail.end());
    out.rotation[r.vertex_map[keep]] = std::move(merged);
  }

  out.sigma_v.assign(nv, -1);
  for (int v = 0; v < V; ++v)
    if (v != drop) out.sigma_v[r.vertex_map[v]] = r.vertex_map[t.sigma_v[v]];
  out.sigma_e.assign(ne, -1);
  for (int i = 0; i < E; ++i)
    if (i != e) out.sigma_e[r.edge_map[i]] = r.edge_map[t.sigma_e[i]];

  out.real_order.clear();
  for (int v : t.real_order) {
    int nvtx = r.vertex_map[v];
    if (out.real_order.empty() || out.real_order.back() != nvtx)
      out.real_order.push_back(nvtx);
  }

  for (const auto& [i, h] : w.H)
    if (i != e) r.weights.H[r.edge_map[i]] = h;
  for (int v = 0; v < V; ++v) {
    int id = r.vertex_map[v];
    if (out.is_saddle(id) && !r.weights.W.count(id))
      r.weights.W[id] = width_of(t, w, v);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Extension faces.

struct FaceWalk {
  std::vector<int> verts;   // v0 .. vm
  std::vector<int> edges;   // edges[i] joins verts[i] and verts[i+1]
  int start_ray = 0;
  int end_ray = 0;
};

std::vector<int> rotation_positions_valid(const ExtendedGraph& ext) {
  // sanity: every entry unique per vertex
  for (const auto& rot : ext.rotation) {
    std::set<int> seen;
    for (int x : rot)
      if (!seen.insert(x).second)
        throw GraphError("extension rotation repeats an end");
  }
  return {};
}

int position_of(const ExtendedGraph& ext, int v, int end) {
  const auto& rot = ext.rotation[v];
  for (int j = 0; j < static_cast<int>(rot.size()); ++j)
    if (rot[j] == end) return j;
  throw GraphError("end not found in extension rotation of vertex " + std::to_string(v));
}

std::vector<FaceWalk> face_walks(const ExtendedGraph& ext) {
  rotation_positions_valid(ext);
  const PlanarTree& t = ext.base;
  // locate each ray
  std::map<int, std::pair<int, int>> ray_site;  // code -> (vertex, pos)
  for (int v = 0; v < t.vertex_count(); ++v)
    for (int j = 0; j < static_cast<int>(ext.rotation[v].size()); ++j)
      if (ext.rotation[v][j] < 0) ray_site[ext.rotation[v][j]] = {v, j};
  std::vector<FaceWalk> out;
  for (const auto& [ray, site] : ray_site) {
    FaceWalk fw;
    fw.start_ray = ray;
    int v = site.first;
    int pos = site.second;
    fw.verts.push_back(v);
    const std::size_t guard = 4 * (t.edge_count() + ext.ray_count) + 8;
    for (std::size_t steps = 0;; ++steps) {
      if (steps > guard) throw GraphError("extension face walk does not terminate");
      const auto& rot = ext.rotation[v];
      pos = (pos + 1) % static_cast<int>(rot.size());
      int end = rot[pos];
      if (end < 0) {
        fw.end_ray = end;
        break;
      }
      fw.edges.push_back(end);
      v = t.other_end(end, v);
      fw.verts.push_back(v);
      pos = position_of(ext, v, end);
    }
    out.push_back(std::move(fw));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// extend / extended_faces / strips_of

ExtendedGraph extend(const PlanarTree& tree) {
  ExtendedGraph x;
  x.base = tree;
  x.rotation.resize(tree.vertex_count());
  for (int v = 0; v < tree.vertex_count(); ++v) {
    const auto& rot = tree.rotation[v];
    const int n = static_cast<int>(rot.size());
    if (n == 0) throw GraphError("isolated vertex " + std::to_string(v));
    auto is_out = [&](int e) {
      return tree.edges[e].kind == EdgeKind::Horizontal && tree.edges[e].a == v;
    };
    std::vector<int> others;
    for (int j = 0; j < n; ++j)
      if (!is_out(rot[j])) others.push_back(j);
    if (others.empty())
      throw GraphError("vertex " + std::to_string(v) + " has only outgoing ends");
    auto& nr = x.rotation[v];
    const int m = static_cast<int>(others.size());
    for (int i = 0; i < m; ++i) {
      int cur = others[i];
      int nxt = others[(i + 1) % m];
      nr.push_back(rot[cur]);
      bool has_out = false;
      for (int j = cur + 1; j % n != nxt; ++j) {
        nr.push_back(rot[j % n]);
        has_out = true;
      }
      if (!has_out) nr.push_back(-(++x.ray_count));
    }
  }
  return x;
}

std::vector<std::vector<int>> extended_faces(const ExtendedGraph& ext) {
  std::vector<std::vector<int>> out;
  for (const FaceWalk& fw : face_walks(ext)) {
    std::vector<int> seq;
    seq.push_back(fw.start_ray);
    for (int e : fw.edges) seq.push_back(e);
    seq.push_back(fw.end_ray);
    out.push_back(std::move(seq));
  }
  return out;
}

std::vector<Strip> strips_of(const PlanarTree& tree, const WeightAssignment& weights,
                             int vertical_edge) {
  require_valid_tree(tree, "strips_of");
  require_weak(tree, weights, "strips_of");
  if (vertical_edge < 0 || vertical_edge >= tree.edge_count())
    throw GraphError("strips_of: edge id out of range");
  if (tree.edges[vertical_edge].kind != EdgeKind::Vertical)
    throw GraphError("strips_of: edge " + std::to_string(vertical_edge) + " is not vertical");
  ExtendedGraph ext = extend(tree);
  std::vector<Strip> out;
  for (const FaceWalk& fw : face_walks(ext)) {
    int rpos = -1;
    for (int i = 0; i < static_cast<int>(fw.edges.size()); ++i)
      if (fw.edges[i] == vertical_edge) {
        if (rpos >= 0) throw GraphError("strips_of: face traverses the vertical edge twice");
        rpos = i;
      }
    if (rpos < 0) continue;
    Strip s;
    s.vertical_edge = vertical_edge;
    Strip::Wall back, fwd;
    for (int j = rpos - 1; j >= 0; --j) {
      back.vertices.push_back(fw.verts[j]);
      back.edges.push_back(fw.edges[j]);
      back.widths.push_back(width_of(tree, weights, fw.verts[j]));
    }
    for (int j = rpos + 2; j < static_cast<int>(fw.verts.size()); ++j) {
      fwd.vertices.push_back(fw.verts[j]);
      fwd.edges.push_back(fw.edges[j - 1]);
      fwd.widths.push_back(width_of(tree, weights, fw.verts[j]));
    }
    if (fw.verts[rpos] == tree.edges[vertical_edge].a) {
      s.from_a = std::move(back);
      s.from_b = std::move(fwd);
    } else {
      s.from_a = std::move(fwd);
      s.from_b = std::move(back);
    }
    out.push_back(std::move(s));
  }
  if (out.size() != 2)
    throw GraphError("strips_of: expected two half-strips, found " + std::to_string(out.size()));
  return out;
}

// ---------------------------------------------------------------------------
// contract

Reduction contract(const PlanarTree& tree, const WeightAssignment& weights, int edge) {
  require_valid_tree(tree, "contract");
  require_weak(tree, weights, "contract");
  if (edge < 0 || edge >= tree.edge_count())
    throw GraphError("contract: edge id out of range");
  if (tree.edges[edge].kind != EdgeKind::Horizontal)
    throw GraphError("contract: edge " + std::to_string(edge) + " is not horizontal");
  const int a = tree.edges[edge].a;
  const int b = tree.edges[edge].b;
  if (width_of(tree, weights, a) != width_of(tree, weights, b))
    throw GraphError("contract: edge " + std::to_string(edge) +
                     " has nonzero width increment");
  const int se = tree.sigma_e[edge];
  {
    Dsu dsu(tree.vertex_count());
    dsu.unite(a, b);
    dsu.unite(tree.edges[se].a, tree.edges[se].b);
    std::map<int, int> bp_count;
    for (int v : {a, b, tree.edges[se].a, tree.edges[se].b})
      bp_count[dsu.find(v)] = 0;
    std::set<int> counted;
    for (int v : {a, b, tree.edges[se].a, tree.edges[se].b}) {
      if (!counted.insert(v).second) continue;
      if (is_branchpoint(tree, v)) ++bp_count[dsu.find(v)];
    }
    for (const auto& [root, count] : bp_count)
      if (count >= 2)
        throw OuterFaceError("contract: edge " + std::to_string(edge) +
                             " would junction " + std::to_string(count) + " branchpoints");
  }
  Reduction r = contract_one(tree, weights, edge);
  if (se != edge) {
    Reduction r2 = contract_one(r.tree, r.weights, r.edge_map[se]);
    r = compose(std::move(r), r2);
  }
  require_valid_result(r.tree, "contract (result)");
  require_weak(r.tree, r.weights, "contract (result)");
  return r;
}

// ---------------------------------------------------------------------------
// zip

namespace {

struct ZipFace {
  std::vector<int> verts;
  std::vector<int> edges;
  int start_ray = 0;
  int end_ray = 0;
  int rpos = -1;  // index into edges of the zipped vertical
};

// Collect the faces bounded by R or its mirror from a fresh extension.
std::vector<ZipFace> zip_faces(const ExtendedGraph& ext, int R, int sR) {
  std::vector<ZipFace> faces;
  for (const FaceWalk& fw : face_walks(ext)) {
    int rpos = -1;
    int hits = 0;
    for (int i = 0; i < static_cast<int>(fw.edges.size()); ++i)
      if (fw.edges[i] == R || fw.edges[i] == sR) {
        rpos = i;
        ++hits;
      }
    if (hits == 0) continue;
    if (hits > 1)
      throw GraphError("zip: a face is bounded by the vertical orbit more than once");
    ZipFace zf;
    zf.verts = fw.verts;
    zf.edges = fw.edges;
    zf.start_ray = fw.start_ray;
    zf.end_ray = fw.end_ray;
    zf.rpos = rpos;
    faces.push_back(std::move(zf));
  }
  const std::size_t expected = (sR == R) ? 2 : 4;
  if (faces.size() != expected)
    throw GraphError("zip: expected " + std::to_string(expected) + " half-strips, found " +
                     std::to_string(faces.size()));
  return faces;
}

// Find a zero-increment horizontal on a strip side, or -1.
int find_zero_wall_edge(const PlanarTree& t, const WeightAssignment& w,
                        const std::vector<ZipFace>& faces) {
  for (const ZipFace& f : faces) {
    for (int i = 0; i < static_cast<int>(f.edges.size()); ++i) {
      if (i == f.rpos) continue;
      int e = f.edges[i];
      if (t.edges[e].kind != EdgeKind::Horizontal)
        throw GraphError("zip: strip side contains a vertical edge");
      if (width_of(t, w, t.edges[e].a) == width_of(t, w, t.edges[e].b)) return e;
    }
  }
  return -1;
}

Reduction zip_core(const PlanarTree& t, const WeightAssignment& w, int R) {
  const int V = t.vertex_count();
  const int E = t.edge_count();
  const int sR = t.sigma_e[R];
  ExtendedGraph ext = extend(t);
  std::vector<ZipFace> faces = zip_faces(ext, R, sR);

  // Wall monotonicity: widths strictly increase outward from the base.
  for (const ZipFace& f : faces) {
    const int m = static_cast<int>(f.edges.size());
    for (int j = f.rpos; j > 0; --j) {
      if (!(width_of(t, w, f.verts[j - 1]) > width_of(t, w, f.verts[j])))
        throw GraphError("zip: strip side is not a monotone chain");
    }
    for (int j = f.rpos + 1; j < m; ++j) {
      if (!(width_of(t, w, f.verts[j + 1]) > width_of(t, w, f.verts[j])))
        throw GraphError("zip: strip side is not a monotone chain");
    }
  }

  // Level structure per face and the global vertex classes.
  Dsu dsu(V);
  struct FaceLevels {
    std::vector<Rat> levels;                 // sorted, levels[0] == 0
    std::vector<std::vector<int>> members;   // per level
  };
  std::vector<FaceLevels> flv(faces.size());
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const ZipFace& f = faces[fi];
    FaceLevels& L = flv[fi];
    std::map<Rat, std::vector<int>> by_w;
    by_w[Rat(0)] = {f.verts[f.rpos], f.verts[f.rpos + 1]};
    const int m = static_cast<int>(f.verts.size()) - 1;
    for (int j = 0; j < f.rpos; ++j) by_w[width_of(t, w, f.verts[j])].push_back(f.verts[j]);
    for (int j = f.rpos + 2; j <= m; ++j)
      by_w[width_of(t, w, f.verts[j])].push_back(f.verts[j]);
    for (auto& [wv, mem] : by_w) {
      L.levels.push_back(wv);
      L.members.push_back(mem);
      for (std::size_t i = 1; i < mem.size(); ++i) dsu.unite(mem[0], mem[i]);
    }
  }

  // Outer check: a merged class may hold at most one branchpoint.
  {
    std::map<int, int> bp_count;
    std::set<int> seen;
    for (std::size_t fi = 0; fi < faces.size(); ++fi)
      for (const auto& mem : flv[fi].members)
        for (int v : mem)
          if (seen.insert(v).second && is_branchpoint(t, v)) ++bp_count[dsu.find(v)];
    for (const auto& [root, count] : bp_count)
      if (count >= 2)
        throw OuterFaceError("zip: edge " + std::to_string(R) + " would junction " +
                             std::to_string(count) + " branchpoints");
  }

  // Demands: one new chain edge between consecutive classes of a face ladder,
  // deduplicated globally by the ordered class pair.
  std::map<std::pair<int, int>, int> demand_id;
  std::vector<std::pair<int, int>> demand_pairs;  // creation order, (lo_root, hi_root)
  auto demand_for = [&](int vlo, int vhi) {
    std::pair<int, int> key{dsu.find(vlo), dsu.find(vhi)};
    auto it = demand_id.find(key);
    if (it != demand_id.end()) return it->second;
    int id = static_cast<int>(demand_pairs.size());
    demand_id[key] = id;
    demand_pairs.push_back(key);
    return id;
  };

  std::map<std::pair<int, int>, int> slot_marker;  // (vertex, ext pos) -> demand
  std::set<std::pair<int, int>> r_slots;           // base slots of R / sigma R
  std::set<int> wall_edges;
  std::vector<int> wall_edge_lowest(E, -1);

  auto add_slot = [&](int v, int pos, int demand) {
    auto key = std::make_pair(v, pos);
    auto it = slot_marker.find(key);
    if (it != slot_marker.end()) {
      if (it->second != demand)
        throw GraphError("zip: conflicting chain assignments at vertex " + std::to_string(v));
      return;
    }
    slot_marker[key] = demand;
  };

  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const ZipFace& f = faces[fi];
    const FaceLevels& L = flv[fi];
    const int m = static_cast<int>(f.verts.size()) - 1;
    auto level_index = [&](const Rat& x) {
      auto it = std::lower_bound(L.levels.begin(), L.levels.end(), x);
      if (it == L.levels.end() || *it != x)
        throw GraphError("zip: internal level lookup failure");
      return static_cast<int>(it - L.levels.begin());
    };
    // base slots of the zipped vertical
    int zipped = f.edges[f.rpos];
    r_slots.insert({f.verts[f.rpos], position_of(ext, f.verts[f.rpos], zipped)});
    r_slots.insert({f.verts[f.rpos + 1], position_of(ext, f.verts[f.rpos + 1], zipped)});
    // wall edges and their pieces
    for (int j = 0; j < static_cast<int>(f.edges.size()); ++j) {
      if (j == f.rpos) continue;
      int e = f.edges[j];
      wall_edges.insert(e);
      int u = f.verts[j], x = f.verts[j + 1];
      int lo = u, hi = x;
      if (width_of(t, w, lo) > width_of(t, w, hi)) std::swap(lo, hi);
      int ilo = level_index(width_of(t, w, lo));
      int ihi = level_index(width_of(t, w, hi));
      for (int li = ilo; li < ihi; ++li)
        demand_for(L.members[li][0], L.members[li + 1][0]);
      int d_lo = demand_for(L.members[ilo][0], L.members[ilo + 1][0]);
      int d_hi = demand_for(L.members[ihi - 1][0], L.members[ihi][0]);
      add_slot(lo, position_of(ext, lo, e), d_lo);
      add_slot(hi, position_of(ext, hi, e), d_hi);
      if (wall_edge_lowest[e] < 0) wall_edge_lowest[e] = d_lo;
    }
    // ray slots continuing a ladder past a wall top
    const int top = static_cast<int>(L.levels.size()) - 1;
    if (f.rpos > 0) {
      int v0 = f.verts[0];
      int idx = level_index(width_of(t, w, v0));
      if (idx < top) {
        int d = demand_for(L.members[idx][0], L.members[idx + 1][0]);
        add_slot(v0, position_of(ext, v0, f.start_ray), d);
      }
    }
    if (f.rpos < static_cast<int>(f.edges.size()) - 1) {
      int vm = f.verts[m];
      int idx = level_index(width_of(t, w, vm));
      if (idx < top) {
        int d = demand_for(L.members[idx][0], L.members[idx + 1][0]);
        add_slot(vm, position_of(ext, vm, f.end_ray), d);
      }
    }
  }

  // Participating classes and their members.
  std::map<int, std::vector<int>> class_members;
  {
    std::set<int> participating;
    for (std::size_t fi = 0; fi < faces.size(); ++fi)
      for (const auto& mem : flv[fi].members)
        for (int v : mem) participating.insert(v);
    for (int v : participating) class_members[dsu.find(v)].push_back(v);
  }

  // Demand sites grouped per class.
  std::map<int, std::map<int, std::vector<std::pair<int, int>>>> sites;
  for (const auto& [slot, d] : slot_marker)
    sites[dsu.find(slot.first)][d].push_back(slot);

  // New ids. Vertices: classes in first-member order; edges: survivors then demands.
  std::vector<int> vmap(V, -1);
  int nv = 0;
  for (int v = 0; v < V; ++v) {
    int root = dsu.find(v);
    if (vmap[root] < 0) vmap[root] = nv++;
    vmap[v] = vmap[root];
  }
  std::vector<int> emap(E, -1);
  int ne = 0;
  for (int e = 0; e < E; ++e) {
    if (e == R || e == sR || wall_edges.count(e)) continue;
    emap[e] = ne++;
  }
  const int survivors = ne;
  auto demand_new_id = [&](int d) { return survivors + d; };
  for (int e = 0; e < E; ++e)
    if (wall_edges.count(e)) emap[e] = demand_new_id(wall_edge_lowest[e]);

  // Stitch the rotation of each participating class.  Classes lying entirely
  // in the lower half-plane are filled afterwards as exact mirror images of
  // their partners, which keeps the two halves synchronized even when the
  // junction walk has several equivalent continuations.
  std::map<int, std::vector<int>> class_rotation;  // root -> ends (old edge ids or E + demand)
  const int DEMAND_TAG = E;
  for (const auto& [root, members] : class_members) {
    bool strictly_lower = true;
    for (int v : members) strictly_lower = strictly_lower && t.is_lower(v);
    if (strictly_lower) continue;
    std::map<std::pair<int, int>, bool> visited;
    for (int v : members)
      for (int j = 0; j < static_cast<int>(ext.rotation[v].size()); ++j)
        visited[{v, j}] = false;
    auto action_of = [&](int v, int pos) -> int {
      // 0 fan, 1 ray-skip, 2 marker, 3 r-jump
      if (r_slots.count({v, pos})) return 3;
      if (slot_marker.count({v, pos})) return 2;
      if (ext.rotation[v][pos] < 0) return 1;
      return 0;
    };
    std::pair<int, int> start{-1, -1};
    for (int v : members) {
      for (int j = 0; j < static_cast<int>(ext.rotation[v].size()); ++j)
        if (action_of(v, j) == 0) {
          start = {v, j};
          break;
        }
      if (start.first >= 0) break;
    }
    if (start.first < 0 && !members.empty() && !ext.rotation[members[0]].empty())
      start = {members[0], 0};
    std::vector<int> rot;
    std::set<int> emitted;
    auto advance = [&](std::pair<int, int> p) {
      p.second = (p.second + 1) % static_cast<int>(ext.rotation[p.first].size());
      return p;
    };
    std::pair<int, int> cur = start;
    const std::size_t guard = 4 * visited.size() + 8;
    for (std::size_t steps = 0; cur.first >= 0 && !visited[cur]; ++steps) {
      if (steps > guard) throw GraphError("zip: junction stitching does not terminate");
      visited[cur] = true;
      int act = action_of(cur.first, cur.second);
      if (act == 3) {
        // Cross the collapsed vertical and continue at its other base slot.
        // The crossing is used once per direction, so the far slot stays
        // unvisited until the walk reaches it and crosses back.
        std::pair<int, int> other{-1, -1};
        for (const auto& s : r_slots)
          if (s != cur && dsu.find(s.first) == root &&
              ext.rotation[s.first][s.second] == ext.rotation[cur.first][cur.second])
            other = s;
        if (other.first >= 0) cur = other;
      } else if (act == 2) {
        int d = slot_marker.at(cur);
        if (!emitted.count(d)) {
          emitted.insert(d);
          rot.push_back(DEMAND_TAG + d);
          for (const auto& s : sites[root][d])
            if (s != cur && !visited[s]) {
              cur = s;
              visited[cur] = true;
              break;
            }
        }
      } else if (act == 0) {
        rot.push_back(ext.rotation[cur.first][cur.second]);
      }
      cur = advance(cur);
    }
    // every fan end and every incident demand must have been reached
    for (const auto& [slot, vis] : visited) {
      if (vis) continue;
      int act = action_of(slot.first, slot.second);
      if (act == 0 || (act == 2 && !emitted.count(slot_marker.at(slot))))
        throw GraphError("zip: junction rotation is disconnected");
    }
    class_rotation[root] = std::move(rot);
  }
  for (const auto& [root, members] : class_members) {
    if (class_rotation.count(root)) continue;
    const int mroot = dsu.find(t.sigma_v[members[0]]);
    auto mit = class_rotation.find(mroot);
    if (mit == class_rotation.end())
      throw GraphError("zip: junction has no mirror partner");
    std::vector<int> rot;
    for (auto rit = mit->second.rbegin(); rit != mit->second.rend(); ++rit) {
      if (*rit >= DEMAND_TAG) {
        const int d = *rit - DEMAND_TAG;
        std::pair<int, int> key{dsu.find(t.sigma_v[demand_pairs[d].first]),
                                dsu.find(t.sigma_v[demand_pairs[d].second])};
        auto dit = demand_id.find(key);
        if (dit == demand_id.end())
          throw GraphError("zip: glued chain is not mirror symmetric");
        rot.push_back(DEMAND_TAG + dit->second);
      } else {
        rot.push_back(t.sigma_e[*rit]);
      }
    }
    class_rotation[root] = std::move(rot);
  }

  // Assemble the quotient.
  Reduction r;
  PlanarTree& out = r.tree;
  out.vertices.resize(nv);
  out.rotation.assign(nv, {});
  out.sigma_v.assign(nv, -1);
  for (const auto& [root, members] : class_members) {
    bool any_real = false, any_upper = false, any_lower = false;
    for (int v : members) {
      any_real |= t.is_real(v);
      any_upper |= t.is_upper(v);
      any_lower |= t.is_lower(v);
    }
    if (!any_real && any_upper && any_lower)
      throw GraphError("zip: junction crosses the axis away from on-axis vertices");
    out.vertices[vmap[root]].axis =
        any_real ? Axis::Real : (any_upper ? Axis::Upper : Axis::Lower);
  }
  for (int v = 0; v < V; ++v) {
    int root = dsu.find(v);
    if (root == v && !class_members.count(root))
      out.vertices[vmap[v]].axis = t.vertices[v].axis;
  }

  const int total_edges = survivors + static_cast<int>(demand_pairs.size());
  out.edges.resize(total_edges);
  for (int e = 0; e < E; ++e) {
    if (e == R || e == sR || wall_edges.count(e)) continue;
    auto& ed = out.edges[emap[e]];
    ed.kind = t.edges[e].kind;
    ed.a = vmap[t.edges[e].a];
    ed.b = vmap[t.edges[e].b];
  }
  for (std::size_t d = 0; d < demand_pairs.size(); ++d) {
    auto& ed = out.edges[demand_new_id(static_cast<int>(d))];
    ed.kind = EdgeKind::Horizontal;
    ed.a = vmap[demand_pairs[d].first];
    ed.b = vmap[demand_pairs[d].second];
  }

  for (int v = 0; v < V; ++v) {
    int root = dsu.find(v);
    if (class_members.count(root)) {
      if (out.rotation[vmap[root]].empty() && !class_rotation[root].empty()) {
        std::vector<int> rot;
        for (int x : class_rotation[root])
          rot.push_back(x >= DEMAND_TAG ? demand_new_id(x - DEMAND_TAG) : emap[x]);
        out.rotation[vmap[root]] = std::move(rot);
      }
    } else {
      auto& rot = out.rotation[vmap[v]];
      if (rot.empty()) {
        for (int e : t.rotation[v]) {
          if (emap[e] < 0)
            throw GraphError("zip: removed edge met outside the strips");
          rot.push_back(emap[e]);
        }
      }
    }
  }

  for (int v = 0; v < V; ++v) out.sigma_v[vmap[v]] = vmap[t.sigma_v[v]];
  out.sigma_e.assign(total_edges, -1);
  for (int e = 0; e < E; ++e) {
    if (e == R || e == sR || wall_edges.count(e)) continue;
    int se = t.sigma_e[e];
    if (se == R || se == sR || wall_edges.count(se))
      throw GraphError("zip: mirror of a surviving edge was absorbed");
    out.sigma_e[emap[e]] = emap[se];
  }
  for (std::size_t d = 0; d < demand_pairs.size(); ++d) {
    std::pair<int, int> key{dsu.find(t.sigma_v[demand_pairs[d].first]),
                            dsu.find(t.sigma_v[demand_pairs[d].second])};
    auto it = demand_id.find(key);
    if (it == demand_id.end())
      throw GraphError("zip: glued chain is not mirror symmetric");
    out.sigma_e[demand_new_id(static_cast<int>(d))] = demand_new_id(it->second);
  }

  for (int v : t.real_order) {
    int nvtx = vmap[v];
    if (out.real_order.empty() || out.real_order.back() != nvtx)
      out.real_order.push_back(nvtx);
  }
  {
    std::set<int> seen;
    for (int v : out.real_order)
      if (!seen.insert(v).second)
        throw GraphError("zip: produced a branched axis order");
  }

  for (const auto& [e, h] : w.H) {
    if (e == R || e == sR) continue;
    r.weights.H[emap[e]] = h;
  }
  for (int v = 0; v < V; ++v) {
    int id = vmap[v];
    if (out.is_saddle(id) && !r.weights.W.count(id))
      r.weights.W[id] = width_of(t, w, v);
  }

  r.vertex_map = std::move(vmap);
  r.edge_map = std::move(emap);
  return r;
}

}  // namespace

Reduction zip(const PlanarTree& tree, const WeightAssignment& weights, int edge) {
  require_valid_tree(tree, "zip");
  require_weak(tree, weights, "zip");
  if (edge < 0 || edge >= tree.edge_count())
    throw GraphError("zip: edge id out of range");
  if (tree.edges[edge].kind != EdgeKind::Vertical)
    throw GraphError("zip: edge " + std::to_string(edge) + " is not vertical");
  if (h_of(weights, edge) != 0)
    throw GraphError("zip: edge " + std::to_string(edge) + " has nonzero height");
  check_branchpoint_distances(tree, weights);

  Reduction acc = identity_reduction(tree, weights);
  int R = edge;
  for (;;) {
    ExtendedGraph ext = extend(acc.tree);
    std::vector<ZipFace> faces = zip_faces(ext, R, acc.tree.sigma_e[R]);
    int zedge = find_zero_wall_edge(acc.tree, acc.weights, faces);
    if (zedge < 0) break;
    Reduction step = contract(acc.tree, acc.weights, zedge);
    R = step.edge_map[R];
    acc = compose(std::move(acc), step);
  }
  Reduction core = zip_core(acc.tree, acc.weights, R);
  acc = compose(std::move(acc), core);
  require_valid_result(acc.tree, "zip (result)");
  require_weak(acc.tree, acc.weights, "zip (result)");
  return acc;
}

Reduction reduce(const PlanarTree& tree, const WeightAssignment& weights) {
  require_valid_tree(tree, "reduce");
  require_weak(tree, weights, "reduce");
  check_branchpoint_distances(tree, weights);
  Reduction acc = identity_reduction(tree, weights);
  for (;;) {
    const PlanarTree& t = acc.tree;
    const WeightAssignment& w = acc.weights;
    int target = -1;
    bool vertical = false;
    for (int e = 0; e < t.edge_count() && target < 0; ++e)
      if (t.edges[e].kind == EdgeKind::Vertical && h_of(w, e) == 0) {
        target = e;
        vertical = true;
      }
    for (int e = 0; e < t.edge_count() && target < 0; ++e)
      if (t.edges[e].kind == EdgeKind::Horizontal &&
          width_of(t, w, t.edges[e].a) == width_of(t, w, t.edges[e].b))
        target = e;
    if (target < 0) break;
    Reduction step = vertical ? zip(t, w, target) : contract(t, w, target);
    acc = compose(std::move(acc), step);
  }
  {
    WeightReport rep = validate_weights(acc.tree, acc.weights, WeightMode::Strict);
    if (!rep.pass())
      throw GraphError("reduce: result fails the strict axioms: " + joined(rep.messages));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// face_lattice

namespace {

// Generic positive heights summing to 1 over the vertical orbits, with the
// listed orbits set to zero.
WeightAssignment sample_heights(const PlanarTree& t, const std::vector<VerticalOrbit>& orbits,
                                const std::set<int>& zeroed) {
  WeightAssignment w;
  Rat total(0);
  std::vector<Rat> value(orbits.size(), Rat(0));
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (zeroed.count(static_cast<int>(i))) continue;
    value[i] = Rat(1) / Rat(static_cast<long long>(2 * i + 3));
    int mult = orbits[i].on_axis ? 1 : 2;
    total += Rat(mult) * value[i];
  }
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    int rep = orbits[i].representative;
    Rat v = total == 0 ? Rat(0) : value[i] / total;
    w.H[rep] = v;
    w.H[t.sigma_e[rep]] = v;
  }
  return w;
}

void assign_widths(const PlanarTree& t, WeightAssignment& w,
                   const std::vector<int>& saddle_reps, const Vec& point) {
  for (std::size_t i = 0; i < saddle_reps.size(); ++i) {
    int rep = saddle_reps[i];
    w.W[rep] = point[i];
    w.W[t.sigma_v[rep]] = point[i];
  }
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.is_saddle(v) && !w.W.count(v))
      throw GraphError("face_lattice: saddle without an orbit representative");
}

Vec centroid_of(const std::vector<Vec>& pts) {
  Vec c(pts.front().size(), Rat(0));
  for (const Vec& p : pts)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  for (auto& x : c) x /= Rat(static_cast<long long>(pts.size()));
  return c;
}

}  // namespace

std::vector<FaceDescriptor> face_lattice(const PlanarTree& tree) {
  require_valid_tree(tree, "face_lattice");
  const std::vector<VerticalOrbit> orbits = vertical_orbits(tree);
  const std::vector<int> saddle_reps = saddle_orbit_representatives(tree);
  const HPolytope cone = width_cone(tree);
  const int n = static_cast<int>(saddle_reps.size());
  std::map<int, int> saddle_index;  // vertex -> coordinate, mirrors share one
  for (int i = 0; i < n; ++i) {
    saddle_index[saddle_reps[i]] = i;
    saddle_index[tree.sigma_v[saddle_reps[i]]] = i;
  }

  auto bounding_box_rows = [&](HPolytope& P) {
    for (int i = 0; i < n; ++i) {
      Vec lo(n, Rat(0)), hi(n, Rat(0));
      lo[i] = Rat(-1);
      hi[i] = Rat(1);
      P.inequalities.push_back({lo, Rat(0)});
      P.inequalities.push_back({hi, Rat(1)});
    }
  };

  auto solve_cell = [&](const std::vector<std::pair<int, int>>& strict_rows)
      -> std::optional<Vec> {
    // rows are pairs (i, j) demanding x_i < x_j; the cone rows stay weak and
    // the unit box bounds the sample (the constraints are scale invariant).
    if (n == 0) return Vec{};
    HPolytope P;
    P.dim = n;
    bounding_box_rows(P);
    for (const HalfSpace& hs : cone.inequalities) P.inequalities.push_back(hs);
    for (const auto& [i, j] : strict_rows) {
      Vec row(n, Rat(0));
      row[i] = Rat(1);
      row[j] = Rat(-1);
      P.inequalities.push_back({row, Rat(0)});
    }
    std::vector<Vec> verts = vertices_of(P);
    if (verts.empty()) return std::nullopt;
    Vec c = centroid_of(verts);
    for (const HalfSpace& hs : cone.inequalities)
      if (dot(hs.normal, c) >= hs.offset) return std::nullopt;
    for (const auto& [i, j] : strict_rows)
      if (!(c[i] < c[j])) return std::nullopt;
    return c;
  };

  auto classify = [&](FaceDescriptor& fd, const WeightAssignment& w) {
    fd.sample = w;
    for (int e = 0; e < tree.edge_count(); ++e)
      if (tree.edges[e].kind == EdgeKind::Horizontal &&
          width_of(tree, w, tree.edges[e].a) == width_of(tree, w, tree.edges[e].b))
        fd.width_equalities.push_back({tree.edges[e].a, tree.edges[e].b});
    try {
      Reduction red = reduce(tree, w);
      fd.inner = true;
      fd.subordinate = red.tree;
      fd.dim = dim_coordinate_space(red.tree);
      if (!(invariants(red.tree) == invariants(tree)))
        throw GraphError("face_lattice: inner face changed the curve invariants");
    } catch (const OuterFaceError& ex) {
      fd.inner = false;
      fd.outer_reason = ex.what();
    }
  };

  std::vector<FaceDescriptor> out;

  // Faces with one vertical-orbit coordinate set to zero, subdivided by the
  // relative order of the side widths of the collapsing strips.
  for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
    // cross-wall comparison pairs from the strips of the representative orbit
    std::set<std::pair<int, int>> cmp;
    {
      int R = orbits[oi].representative;
      int sR = tree.sigma_e[R];
      ExtendedGraph ext = extend(tree);
      for (const FaceWalk& fw : face_walks(ext)) {
        int rpos = -1;
        for (int i = 0; i < static_cast<int>(fw.edges.size()); ++i)
          if (fw.edges[i] == R || fw.edges[i] == sR) rpos = i;
        if (rpos < 0) continue;
        for (int jb = 0; jb < rpos; ++jb)
          for (int jf = rpos + 2; jf < static_cast<int>(fw.verts.size()); ++jf) {
            int p = fw.verts[jb], q = fw.verts[jf];
            auto ip = saddle_index.find(p), iq = saddle_index.find(q);
            if (ip == saddle_index.end() || iq == saddle_index.end())
              throw GraphError("face_lattice: strip side vertex is not a saddle");
            if (ip->second == iq->second) continue;
            int lo = std::min(ip->second, iq->second);
            int hi = std::max(ip->second, iq->second);
            cmp.insert({lo, hi});
          }
      }
    }
    std::vector<std::pair<int, int>> pairs(cmp.begin(), cmp.end());
    const int cells = 1 << pairs.size();
    for (int mask = 0; mask < cells; ++mask) {
      std::vector<std::pair<int, int>> strict_rows;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [i, j] = pairs[k];
        if (mask & (1 << k))
          strict_rows.push_back({j, i});  // x_j < x_i
        else
          strict_rows.push_back({i, j});  // x_i < x_j
      }
      std::optional<Vec> point = solve_cell(strict_rows);
      if (!point) continue;
      FaceDescriptor fd;
      fd.zero_orbits = {static_cast<int>(oi)};
      for (const auto& [i, j] : strict_rows)
        fd.width_order.push_back({saddle_reps[i], saddle_reps[j]});
      WeightAssignment w = sample_heights(tree, orbits, {static_cast<int>(oi)});
      assign_widths(tree, w, saddle_reps, *point);
      classify(fd, w);
      out.push_back(std::move(fd));
    }
  }

  // Faces with one width-cone facet tightened to equality.
  std::vector<std::pair<Vec, Rat>> facets;
  for (const HalfSpace& hs : cone.inequalities) {
    auto key = std::make_pair(hs.normal, hs.offset);
    if (std::find(facets.begin(), facets.end(), key) == facets.end()) facets.push_back(key);
  }
  for (const auto& [normal, offset] : facets) {
    if (n == 0) break;
    HPolytope P;
    P.dim = n;
    bounding_box_rows(P);
    P.equalities.push_back({normal, offset});
    for (const HalfSpace& hs : cone.inequalities) P.inequalities.push_back(hs);
    std::vector<Vec> verts = vertices_of(P);
    if (verts.empty()) continue;
    Vec c = centroid_of(verts);
    bool genuine = true;
    for (const HalfSpace& hs : cone.inequalities) {
      if (hs.normal == normal && hs.offset == offset) continue;
      if (dot(hs.normal, c) >= hs.offset) genuine = false;
    }
    if (!genuine) continue;  // equality here would force a second facet: deeper face
    FaceDescriptor fd;
    WeightAssignment w = sample_heights(tree, orbits, {});
    assign_widths(tree, w, saddle_reps, c);
    classify(fd, w);
    out.push_back(std::move(fd));
  }

  return out;
}

}  // namespace wpt
