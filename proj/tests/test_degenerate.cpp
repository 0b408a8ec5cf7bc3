// Degeneration machinery: extension rays and half-strip faces, contraction of
// flat horizontal edges, the strip-collapsing zip, full reduction, and the
// codimension-one face lattice of a coordinate space.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wpt/build.hpp"
#include "wpt/degenerate.hpp"
#include "wpt/enumerate.hpp"
#include "wpt/graph.hpp"
#include "wpt/json_io.hpp"

namespace {

using wpt::AxisLink;
using wpt::PlanarTree;
using wpt::Rat;
using wpt::UpperNode;
using wpt::WeightAssignment;
using Link = wpt::UpperNode::Link;

constexpr auto kV = AxisLink::VerticalEdge;
constexpr auto kR = AxisLink::RightwardEdge;
constexpr auto kL = AxisLink::LeftwardEdge;

std::string fixture_path(const std::string& name) {
  return std::string(WPT_FIXTURES_DIR) + "/" + name + ".json";
}

wpt::GraphDocument load(const std::string& name) {
  return wpt::load_graph(fixture_path(name));
}

UpperNode stub() { return UpperNode{Link::Vertical, {}}; }

// A flat vertex holding a vertical stub pair and feeding one outgoing end.
UpperNode feeder() { return UpperNode{Link::InEdge, {stub(), stub()}}; }

// The vertical edge on the axis between the i-th and (i+1)-th real vertices.
int axis_vertical(const PlanarTree& t, int i) {
  const int u = t.real_order.at(i);
  const int v = t.real_order.at(i + 1);
  for (int e = 0; e < t.edge_count(); ++e) {
    const auto& ed = t.edges[e];
    if (ed.kind != wpt::EdgeKind::Vertical) continue;
    if ((ed.a == u && ed.b == v) || (ed.a == v && ed.b == u)) return e;
  }
  REQUIRE_MESSAGE(false, "no axis vertical at position " << i);
  return -1;
}

// The unique horizontal edge incident to a vertex (used on chain fixtures).
int horizontal_at(const PlanarTree& t, int v) {
  for (int e : t.rotation.at(v))
    if (t.edges[e].kind == wpt::EdgeKind::Horizontal) return e;
  REQUIRE_MESSAGE(false, "no horizontal end at vertex " << v);
  return -1;
}

// The unique vertical stub from a real vertex into the upper half-plane.
int upper_stub_at(const PlanarTree& t, int v) {
  for (int e : t.rotation.at(v))
    if (t.edges[e].kind == wpt::EdgeKind::Vertical && t.is_upper(t.other_end(e, v)))
      return e;
  REQUIRE_MESSAGE(false, "no upper stub at vertex " << v);
  return -1;
}

// The upper flat vertex carrying a vertical stub pair and one outgoing end.
int find_upper_feeder(const PlanarTree& t) {
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.is_upper(v) && t.vertical_degree(v) == 2 && t.outgoing_degree(v) == 1)
      return v;
  REQUIRE_MESSAGE(false, "no upper feeder vertex");
  return -1;
}

// The two stub edges of a feeder, in rotation order after its outgoing end.
std::pair<int, int> feeder_stubs(const PlanarTree& t, int mid) {
  const auto& rot = t.rotation.at(mid);
  REQUIRE(rot.size() == 3);
  int p = -1;
  for (int j = 0; j < 3; ++j)
    if (t.edges[rot[j]].kind == wpt::EdgeKind::Horizontal) p = j;
  REQUIRE(p >= 0);
  return {rot[(p + 1) % 3], rot[(p + 2) % 3]};
}

// Equal heights 1/n on every vertical edge outside `zeroed` (mirror images of
// zeroed edges are zeroed as well); widths are left to the caller.
WeightAssignment uniform_h(const PlanarTree& t, const std::set<int>& zeroed_in = {}) {
  std::set<int> zeroed;
  for (int e : zeroed_in) {
    zeroed.insert(e);
    zeroed.insert(t.sigma_e.at(e));
  }
  int n = 0;
  for (int e = 0; e < t.edge_count(); ++e)
    if (t.edges[e].kind == wpt::EdgeKind::Vertical && !zeroed.count(e)) ++n;
  REQUIRE(n > 0);
  WeightAssignment w;
  for (int e = 0; e < t.edge_count(); ++e)
    if (t.edges[e].kind == wpt::EdgeKind::Vertical)
      w.H[e] = zeroed.count(e) ? Rat(0) : Rat(1, n);
  return w;
}

// Generic weights for an arbitrary catalog graph: distinct simplex heights
// per vertical orbit (zeroing the requested representatives) and strict
// longest-path widths on the saddles.
WeightAssignment generic_weights(const PlanarTree& t, const std::set<int>& zero_reps = {}) {
  const auto orbits = wpt::vertical_orbits(t);
  std::set<int> zeroed;
  for (int r : zero_reps) {
    zeroed.insert(r);
    zeroed.insert(t.sigma_e.at(r));
  }
  Rat total(0);
  std::vector<Rat> val(orbits.size(), Rat(0));
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (zeroed.count(orbits[i].representative)) continue;
    val[i] = Rat(1, static_cast<int>(2 * i + 3));
    total += (orbits[i].on_axis ? Rat(1) : Rat(2)) * val[i];
  }
  WeightAssignment w;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const int rep = orbits[i].representative;
    const Rat v = zeroed.count(rep) ? Rat(0) : val[i] / total;
    w.H[rep] = v;
    w.H[t.sigma_e.at(rep)] = v;
  }
  std::vector<int> level(t.vertex_count(), 0);
  for (int pass = 0; pass < t.vertex_count(); ++pass)
    for (int e = 0; e < t.edge_count(); ++e) {
      if (t.edges[e].kind != wpt::EdgeKind::Horizontal) continue;
      const int lo = t.in_vertical_part(t.edges[e].a) ? 0 : level[t.edges[e].a];
      level[t.edges[e].b] = std::max(level[t.edges[e].b], lo + 1);
    }
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.is_saddle(v)) w.W[v] = Rat(level[v]);
  return w;
}

// Shared sanity for any Reduction: surjective maps, vertex multiplicities add
// up over the merged classes, surviving edges keep their kind and height, the
// result is a valid weighted graph of the same curve.
void check_reduction(const PlanarTree& before, const WeightAssignment& w,
                     const wpt::Reduction& red) {
  REQUIRE(static_cast<int>(red.vertex_map.size()) == before.vertex_count());
  REQUIRE(static_cast<int>(red.edge_map.size()) == before.edge_count());
  std::vector<int> sum(red.tree.vertex_count(), 0);
  std::vector<bool> hit(red.tree.vertex_count(), false);
  for (int v = 0; v < before.vertex_count(); ++v) {
    const int u = red.vertex_map[v];
    REQUIRE(u >= 0);
    REQUIRE(u < red.tree.vertex_count());
    hit[u] = true;
    sum[u] += wpt::ord(before, v);
  }
  for (int u = 0; u < red.tree.vertex_count(); ++u) {
    CHECK(hit[u]);
    CHECK(sum[u] == wpt::ord(red.tree, u));
  }
  for (int e = 0; e < before.edge_count(); ++e) {
    const int f = red.edge_map[e];
    if (f < 0) continue;
    REQUIRE(f < red.tree.edge_count());
    if (before.edges[e].kind == wpt::EdgeKind::Vertical) {
      CHECK(red.tree.edges[f].kind == wpt::EdgeKind::Vertical);
      CHECK(red.weights.H.at(f) == w.H.at(e));
    }
  }
  CHECK(wpt::validate_topology(red.tree).pass());
  CHECK(wpt::invariants(red.tree) == wpt::invariants(before));
  CHECK(wpt::validate_weights(red.tree, red.weights, wpt::WeightMode::Weak).pass());
}

// Expect a GraphError that is not the outer-face variety.
template <typename Fn>
void expect_plain_graph_error(Fn&& fn) {
  try {
    fn();
    FAIL_CHECK("expected a GraphError");
  } catch (const wpt::OuterFaceError&) {
    FAIL_CHECK("expected a plain GraphError, got OuterFaceError");
  } catch (const wpt::GraphError&) {
    // expected
  }
}

std::string wcanon(const PlanarTree& t, const WeightAssignment& w) {
  return wpt::canonical_form_weighted(t, w);
}

// ---------------------------------------------------------------------------
// Hand-built hosts for the zip tests.

struct Host {
  wpt::AssembledTree at;
  WeightAssignment w;
  int R = -1;  // the zero vertical to zip
};

// Two side chains with interleaved widths hanging over the two endpoints of a
// zero vertical edge: B-chain (1/8, 1/2) over the left endpoint, A-chain
// (1/4, 1/2, 3/4) over the right one, every chain vertex fed by a stub pair.
Host interleave_host() {
  UpperNode B2{Link::OutEdge, {feeder()}};
  UpperNode B1{Link::OutEdge, {B2, feeder()}};
  UpperNode A3{Link::OutEdge, {feeder()}};
  UpperNode A2{Link::OutEdge, {feeder(), A3}};
  UpperNode A1{Link::OutEdge, {feeder(), A2}};
  wpt::AxisScript s;
  s.axis.resize(4);
  s.axis[0].uppers = {stub()};
  s.axis[1].uppers = {B1};
  s.axis[2].uppers = {A1};
  s.links = {kR, kV, kV};
  Host h;
  h.at = wpt::assemble(s);
  h.R = h.at.axis_edges[1];
  h.w = uniform_h(h.at.tree, {h.R});
  const auto& bv = h.at.upper_vertices[1][0];
  const auto& av = h.at.upper_vertices[2][0];
  h.w.W[bv[0]] = Rat(1, 8);
  h.w.W[bv[1]] = Rat(1, 2);
  h.w.W[av[0]] = Rat(1, 4);
  h.w.W[av[4]] = Rat(1, 2);
  h.w.W[av[8]] = Rat(3, 4);
  wpt::symmetrize_weights(h.at.tree, h.w);
  return h;
}

// Expected quotient of the interleave host: one ladder sorted by width, the
// equal-width rung vertices merged into a single chain vertex.
wpt::AssembledTree interleave_expected_zip() {
  UpperNode zA3{Link::OutEdge, {feeder()}};
  UpperNode zTie{Link::OutEdge, {feeder(), zA3, feeder()}};
  UpperNode zA1{Link::OutEdge, {feeder(), zTie}};
  UpperNode zB1{Link::OutEdge, {zA1, feeder()}};
  wpt::AxisScript s;
  s.axis.resize(3);
  s.axis[0].uppers = {stub()};
  s.axis[1].uppers = {zB1};
  s.links = {kR, kV};
  return wpt::assemble(s);
}

WeightAssignment interleave_expected_weights(const wpt::AssembledTree& at, int ladder_axis,
                                             int ladder_slot) {
  WeightAssignment w = uniform_h(at.tree);
  const auto& lv = at.upper_vertices[ladder_axis][ladder_slot];
  w.W[lv[0]] = Rat(1, 8);
  w.W[lv[1]] = Rat(1, 4);
  w.W[lv[5]] = Rat(1, 2);
  w.W[lv[9]] = Rat(3, 4);
  wpt::symmetrize_weights(at.tree, w);
  return w;
}

// Saddles over both endpoints of the zero vertical: one saddle with a single
// feeder on the left, one with two feeders on the right.
Host crossing_host(const Rat& ws, const Rat& wsp) {
  UpperNode S{Link::OutEdge, {feeder()}};
  UpperNode Sp{Link::OutEdge, {feeder(), feeder()}};
  wpt::AxisScript s;
  s.axis.resize(4);
  s.axis[1].uppers = {S};
  s.axis[2].uppers = {Sp};
  s.links = {kV, kV, kV};
  Host h;
  h.at = wpt::assemble(s);
  h.R = h.at.axis_edges[1];
  h.w = uniform_h(h.at.tree, {h.R});
  h.w.W[h.at.upper_vertices[1][0][0]] = ws;
  h.w.W[h.at.upper_vertices[2][0][0]] = wsp;
  wpt::symmetrize_weights(h.at.tree, h.w);
  return h;
}

// A chain over one endpoint of the zero vertical whose middle edge is flat,
// so the zip must contract it before collapsing the strips.
Host byproduct_host() {
  UpperNode S2{Link::OutEdge, {feeder()}};
  UpperNode S1{Link::OutEdge, {S2, feeder()}};
  wpt::AxisScript s;
  s.axis.resize(4);
  s.axis[1].uppers = {S1};
  s.axis[2].uppers = {stub()};
  s.links = {kV, kV, kV};
  Host h;
  h.at = wpt::assemble(s);
  h.R = h.at.axis_edges[1];
  h.w = uniform_h(h.at.tree, {h.R});
  h.w.W[h.at.upper_vertices[1][0][0]] = Rat(1, 2);
  h.w.W[h.at.upper_vertices[1][0][1]] = Rat(1, 2);
  wpt::symmetrize_weights(h.at.tree, h.w);
  return h;
}

}  // namespace

// ---------------------------------------------------------------------------

TEST_CASE("extension adds alternating rays and one face per ray") {
  std::vector<std::pair<std::string, PlanarTree>> graphs;
  for (const char* name :
       {"h2k3_three_chains", "h2k2_cross_chain", "h2k2_corner_stub",
        "h2k2_stub_between_saddles", "h2k1_stub_comb", "h2k1_floating_chain",
        "h2k1_twin_saddles", "h2k1_chain_fed_crossing", "h2k1_cross_and_saddle",
        "h2k1_stub_saddle_ladder", "periods_g6k2"})
    graphs.push_back({name, load(name).tree});
  for (int k = 1; k <= 3; ++k) {
    wpt::EnumerateOptions opt;
    opt.genus = 2;
    opt.ovals = k;
    for (const auto& g : wpt::enumerate_graphs(opt))
      graphs.push_back({"catalog " + g.key.substr(0, 12), g.tree});
  }

  for (const auto& [name, t] : graphs) {
    CAPTURE(name);
    const auto ext = wpt::extend(t);
    int verticals = 0;
    for (int e = 0; e < t.edge_count(); ++e)
      if (t.edges[e].kind == wpt::EdgeKind::Vertical) ++verticals;

    int rays = 0;
    for (int v = 0; v < t.vertex_count(); ++v) {
      const auto& rot = ext.rotation[v];
      int vray = 0;
      for (int x : rot)
        if (x < 0) ++vray;
      CHECK(vray == t.degree(v) - 2 * t.outgoing_degree(v));
      rays += vray;
      // outgoing ends and rays alternate with the remaining ends
      const int n = static_cast<int>(rot.size());
      REQUIRE(n % 2 == 0);
      auto outgoing_kind = [&](int x) {
        return x < 0 || (t.edges[x].kind == wpt::EdgeKind::Horizontal && t.edges[x].a == v);
      };
      for (int j = 0; j < n; ++j)
        CHECK(outgoing_kind(rot[j]) != outgoing_kind(rot[(j + 1) % n]));
    }
    CHECK(rays == 2 * verticals);
    CHECK(ext.ray_count == rays);

    const auto faces = wpt::extended_faces(ext);
    CHECK(static_cast<int>(faces.size()) == rays);
    std::map<int, int> edge_uses;
    for (const auto& f : faces) {
      REQUIRE(f.size() >= 2);
      CHECK(f.front() < 0);
      CHECK(f.back() < 0);
      int vert_in_face = 0;
      for (std::size_t i = 1; i + 1 < f.size(); ++i) {
        REQUIRE(f[i] >= 0);
        ++edge_uses[f[i]];
        if (t.edges[f[i]].kind == wpt::EdgeKind::Vertical) ++vert_in_face;
      }
      CHECK(vert_in_face == 1);  // every face is a half-strip around one vertical
    }
    for (int e = 0; e < t.edge_count(); ++e) {
      CAPTURE(e);
      CHECK(edge_uses[e] == 2);
    }
  }
}

TEST_CASE("half strips report the walls beside a vertical edge") {
  const auto doc = load("h2k3_three_chains");
  const PlanarTree& t = doc.tree;
  const int r2 = axis_vertical(t, 3);  // middle real chain
  const auto strips = wpt::strips_of(t, (*doc.weights), r2);
  REQUIRE(strips.size() == 2);
  for (const auto& s : strips) {
    CHECK(s.vertical_edge == r2);
    REQUIRE(s.from_a.vertices.size() == 1);
    REQUIRE(s.from_b.vertices.size() == 1);
    CHECK(t.is_saddle(s.from_a.vertices[0]));
    CHECK(t.is_saddle(s.from_b.vertices[0]));
    REQUIRE(s.from_a.widths.size() == 1);
    REQUIRE(s.from_b.widths.size() == 1);
    CHECK(s.from_a.widths[0] == Rat(1, 2));
    CHECK(s.from_b.widths[0] == Rat(1, 3));
    CHECK(s.from_a.edges.size() == 1);
    CHECK(s.from_b.edges.size() == 1);
  }
  // the two faces of the edge list the same pair of walls
  CHECK(strips[0].from_a.vertices == strips[1].from_a.vertices);
  CHECK(strips[0].from_b.vertices == strips[1].from_b.vertices);

  CHECK_THROWS_AS(wpt::strips_of(t, (*doc.weights), horizontal_at(t, t.real_order[1])),
                  wpt::GraphError);
}

TEST_CASE("contracting a flat horizontal merges its endpoints") {
  const auto doc = load("h2k3_three_chains");
  const PlanarTree& t = doc.tree;
  const int e1 = horizontal_at(t, t.real_order[1]);
  const int e2 = horizontal_at(t, t.real_order[3]);

  // strict weights leave nothing to contract
  expect_plain_graph_error([&] { (void)wpt::contract(t, (*doc.weights), e1); });
  // vertical edges cannot be contracted at all
  expect_plain_graph_error([&] { (void)wpt::contract(t, (*doc.weights), axis_vertical(t, 0)); });

  // flatten the first saddle: both its incoming edges get zero increment
  WeightAssignment w = (*doc.weights);
  const int sad1 = t.edges[e1].b;
  REQUIRE(t.is_saddle(sad1));
  w.W[sad1] = Rat(0);

  const auto red = wpt::contract(t, w, e1);
  check_reduction(t, w, red);
  CHECK(red.vertex_map[t.edges[e1].a] == red.vertex_map[t.edges[e1].b]);
  CHECK(red.edge_map[e1] == -1);
  CHECK(wpt::is_branchpoint(red.tree, red.vertex_map[sad1]));

  {
    wpt::AxisScript s;
    s.axis.resize(7);
    s.links = {kV, kL, kV, kR, kL, kV};
    const auto at = wpt::assemble(s);
    WeightAssignment ew;
    ew.H[axis_vertical(at.tree, 0)] = Rat(1, 2);
    ew.H[axis_vertical(at.tree, 2)] = Rat(1, 3);
    ew.H[axis_vertical(at.tree, 5)] = Rat(1, 6);
    ew.W[at.tree.edges[horizontal_at(at.tree, at.tree.real_order[3])].b] = Rat(1, 3);
    wpt::symmetrize_weights(at.tree, ew);
    CHECK(wcanon(red.tree, red.weights) == wcanon(at.tree, ew));
  }

  // contracting the second flat edge would fuse two branchpoints
  const int e2m = red.edge_map[e2];
  REQUIRE(e2m >= 0);
  CHECK_THROWS_AS((void)wpt::contract(red.tree, red.weights, e2m), wpt::OuterFaceError);
  // the full reduction sees the fused pair up front
  CHECK_THROWS_AS((void)wpt::reduce(t, w), wpt::OuterFaceError);
}

TEST_CASE("zipping a leaf vertical merges the axis pair behind it") {
  const auto doc = load("h2k1_stub_comb");
  const PlanarTree& t = doc.tree;
  const int r1 = axis_vertical(t, 0);
  WeightAssignment w;
  w.H[r1] = Rat(0);
  w.H[axis_vertical(t, 1)] = Rat(1, 4);
  w.H[axis_vertical(t, 2)] = Rat(1, 4);
  w.H[upper_stub_at(t, t.real_order[1])] = Rat(1, 8);
  w.H[upper_stub_at(t, t.real_order[2])] = Rat(1, 8);
  wpt::symmetrize_weights(t, w);
  REQUIRE(wpt::validate_weights(t, w, wpt::WeightMode::Weak).pass());

  // only zero verticals can be zipped
  expect_plain_graph_error([&] { (void)wpt::zip(t, w, axis_vertical(t, 1)); });
  expect_plain_graph_error([&] { (void)wpt::zip(t, (*doc.weights), r1); });

  const auto red = wpt::zip(t, w, r1);
  check_reduction(t, w, red);
  CHECK(red.edge_map[r1] == -1);
  CHECK(red.vertex_map[t.real_order[0]] == red.vertex_map[t.real_order[1]]);
  CHECK(wpt::is_branchpoint(red.tree, red.vertex_map[t.real_order[0]]));

  wpt::AxisScript s;
  s.axis.resize(3);
  s.axis[0].uppers = {stub()};
  s.axis[1].uppers = {stub()};
  s.links = {kV, kV};
  const auto at = wpt::assemble(s);
  WeightAssignment ew;
  ew.H[axis_vertical(at.tree, 0)] = Rat(1, 4);
  ew.H[axis_vertical(at.tree, 1)] = Rat(1, 4);
  ew.H[upper_stub_at(at.tree, at.tree.real_order[0])] = Rat(1, 8);
  ew.H[upper_stub_at(at.tree, at.tree.real_order[1])] = Rat(1, 8);
  wpt::symmetrize_weights(at.tree, ew);
  CHECK(wcanon(red.tree, red.weights) == wcanon(at.tree, ew));
}

TEST_CASE("zip interleaves side chains by width") {
  const Host h = interleave_host();
  REQUIRE(wpt::validate_topology(h.at.tree).pass());
  REQUIRE(wpt::validate_weights(h.at.tree, h.w, wpt::WeightMode::Weak).pass());
  const auto inv = wpt::invariants(h.at.tree);
  CHECK(inv.genus == 11);
  CHECK(inv.ovals == 1);

  const auto red = wpt::zip(h.at.tree, h.w, h.R);
  check_reduction(h.at.tree, h.w, red);

  // the endpoints merged, and so did the equal-width chain vertices
  const int a = h.at.axis_vertices[1];
  const int b = h.at.axis_vertices[2];
  CHECK(red.vertex_map[a] == red.vertex_map[b]);
  const int B2 = h.at.upper_vertices[1][0][1];
  const int A2 = h.at.upper_vertices[2][0][4];
  CHECK(red.vertex_map[A2] == red.vertex_map[B2]);
  const int A1 = h.at.upper_vertices[2][0][0];
  const int B1 = h.at.upper_vertices[1][0][0];
  CHECK(red.vertex_map[A1] != red.vertex_map[B1]);

  // both chain-root edges were absorbed into the same ladder rung
  const int eaB1 = h.at.upper_edges[1][0][0];
  const int ebA1 = h.at.upper_edges[2][0][0];
  REQUIRE(red.edge_map[eaB1] >= 0);
  CHECK(red.edge_map[eaB1] == red.edge_map[ebA1]);
  CHECK(red.tree.edges[red.edge_map[eaB1]].kind == wpt::EdgeKind::Horizontal);

  const auto at = interleave_expected_zip();
  const auto ew = interleave_expected_weights(at, 1, 0);
  CHECK(wcanon(red.tree, red.weights) == wcanon(at.tree, ew));

  // full reduction also contracts the flat axis edge on the left
  const auto full = wpt::reduce(h.at.tree, h.w);
  check_reduction(h.at.tree, h.w, full);
  UpperNode zA3{Link::OutEdge, {feeder()}};
  UpperNode zTie{Link::OutEdge, {feeder(), zA3, feeder()}};
  UpperNode zA1{Link::OutEdge, {feeder(), zTie}};
  UpperNode zB1{Link::OutEdge, {zA1, feeder()}};
  wpt::AxisScript s;
  s.axis.resize(2);
  s.axis[0].uppers = {zB1, stub()};
  s.links = {kV};
  const auto at2 = wpt::assemble(s);
  const auto ew2 = interleave_expected_weights(at2, 0, 0);
  CHECK(wcanon(full.tree, full.weights) == wcanon(at2.tree, ew2));
}

TEST_CASE("zip merges equal width saddles across the strip") {
  const Host h = crossing_host(Rat(1, 2), Rat(1, 2));
  const auto inv = wpt::invariants(h.at.tree);
  CHECK(inv.genus == 6);
  CHECK(inv.ovals == 1);

  const auto red = wpt::zip(h.at.tree, h.w, h.R);
  check_reduction(h.at.tree, h.w, red);
  const int S = h.at.upper_vertices[1][0][0];
  const int Sp = h.at.upper_vertices[2][0][0];
  CHECK(red.vertex_map[S] == red.vertex_map[Sp]);

  UpperNode merged{Link::OutEdge, {feeder(), feeder(), feeder()}};
  wpt::AxisScript s;
  s.axis.resize(3);
  s.axis[1].uppers = {merged};
  s.links = {kV, kV};
  const auto at = wpt::assemble(s);
  WeightAssignment ew = uniform_h(at.tree);
  ew.W[at.upper_vertices[1][0][0]] = Rat(1, 2);
  wpt::symmetrize_weights(at.tree, ew);
  CHECK(wcanon(red.tree, red.weights) == wcanon(at.tree, ew));
}

TEST_CASE("zip keeps distinct widths on separate ladder rungs") {
  const Host h = crossing_host(Rat(1, 3), Rat(2, 3));
  const auto red = wpt::zip(h.at.tree, h.w, h.R);
  check_reduction(h.at.tree, h.w, red);
  const int S = h.at.upper_vertices[1][0][0];
  const int Sp = h.at.upper_vertices[2][0][0];
  CHECK(red.vertex_map[S] != red.vertex_map[Sp]);

  UpperNode top{Link::OutEdge, {feeder(), feeder()}};
  UpperNode bottom{Link::OutEdge, {top, feeder()}};
  wpt::AxisScript s;
  s.axis.resize(3);
  s.axis[1].uppers = {bottom};
  s.links = {kV, kV};
  const auto at = wpt::assemble(s);
  WeightAssignment ew = uniform_h(at.tree);
  ew.W[at.upper_vertices[1][0][0]] = Rat(1, 3);
  ew.W[at.upper_vertices[1][0][1]] = Rat(2, 3);
  wpt::symmetrize_weights(at.tree, ew);
  CHECK(wcanon(red.tree, red.weights) == wcanon(at.tree, ew));
}

TEST_CASE("zip contracts flat strip-side edges as a byproduct") {
  const Host h = byproduct_host();
  const auto inv = wpt::invariants(h.at.tree);
  CHECK(inv.genus == 5);
  CHECK(inv.ovals == 1);

  const auto red = wpt::zip(h.at.tree, h.w, h.R);
  check_reduction(h.at.tree, h.w, red);
  const int S1 = h.at.upper_vertices[1][0][0];
  const int S2 = h.at.upper_vertices[1][0][1];
  CHECK(red.vertex_map[S1] == red.vertex_map[S2]);
  CHECK(red.vertex_map[h.at.axis_vertices[1]] == red.vertex_map[h.at.axis_vertices[2]]);

  UpperNode merged{Link::OutEdge, {feeder(), feeder()}};
  wpt::AxisScript s;
  s.axis.resize(3);
  s.axis[1].uppers = {stub(), merged};
  s.links = {kV, kV};
  const auto at = wpt::assemble(s);
  WeightAssignment ew = uniform_h(at.tree);
  ew.W[at.upper_vertices[1][1][0]] = Rat(1, 2);
  wpt::symmetrize_weights(at.tree, ew);
  CHECK(wcanon(red.tree, red.weights) == wcanon(at.tree, ew));
}

TEST_CASE("zipping a chain stub glues the chain onto itself") {
  const auto doc = load("h2k1_floating_chain");
  const PlanarTree& t = doc.tree;
  const int mid = find_upper_feeder(t);
  const auto [ce, cw] = feeder_stubs(t, mid);
  const int r1 = axis_vertical(t, 0);
  const int r2 = axis_vertical(t, 1);
  const int saddle = t.edges[horizontal_at(t, t.real_order[1])].b;

  auto make_w = [&](int zero_stub, int kept_stub) {
    WeightAssignment w;
    w.H[r1] = Rat(1, 4);
    w.H[r2] = Rat(1, 4);
    w.H[zero_stub] = Rat(0);
    w.H[kept_stub] = Rat(1, 4);
    w.W[saddle] = Rat(1, 2);
    wpt::symmetrize_weights(t, w);
    return w;
  };

  const auto we = make_w(ce, cw);
  const auto red_e = wpt::zip(t, we, ce);
  check_reduction(t, we, red_e);
  CHECK(red_e.vertex_map[mid] == red_e.vertex_map[t.other_end(ce, mid)]);
  CHECK(wpt::is_branchpoint(red_e.tree, red_e.vertex_map[mid]));

  UpperNode chain{Link::OutEdge, {UpperNode{Link::InEdge, {stub()}}}};
  wpt::AxisScript s;
  s.axis.resize(3);
  s.axis[1].uppers = {chain};
  s.links = {kV, kV};
  const auto at = wpt::assemble(s);
  WeightAssignment ew;
  ew.H[axis_vertical(at.tree, 0)] = Rat(1, 4);
  ew.H[axis_vertical(at.tree, 1)] = Rat(1, 4);
  ew.H[at.upper_edges[1][0][2]] = Rat(1, 4);
  ew.W[at.upper_vertices[1][0][0]] = Rat(1, 2);
  wpt::symmetrize_weights(at.tree, ew);
  CHECK(wcanon(red_e.tree, red_e.weights) == wcanon(at.tree, ew));

  // zipping the other stub of the pair produces the same weighted quotient
  const auto ww = make_w(cw, ce);
  const auto red_w = wpt::zip(t, ww, cw);
  CHECK(wcanon(red_w.tree, red_w.weights) == wcanon(red_e.tree, red_e.weights));
}

TEST_CASE("a chain of eliminations reaches the double crossing") {
  const auto doc = load("h2k1_chain_fed_crossing");
  const PlanarTree& t = doc.tree;
  const int mid = find_upper_feeder(t);
  const auto [ce, cw] = feeder_stubs(t, mid);
  const int r = axis_vertical(t, 0);
  const int front = t.real_order[2];  // saddle collecting the two real arcs
  const int back = t.real_order[3];   // saddle fed by the floating chain
  REQUIRE(t.is_saddle(front));
  REQUIRE(t.is_saddle(back));

  WeightAssignment w;
  w.H[r] = Rat(1, 4);
  w.H[ce] = Rat(1, 8);
  w.H[cw] = Rat(1, 4);
  w.W[front] = Rat(1, 2);
  w.W[back] = Rat(1, 2);
  wpt::symmetrize_weights(t, w);
  CHECK(wpt::dim_coordinate_space(t) == 4);

  // first step: the flat real edge between the saddles contracts
  const auto red1 = wpt::reduce(t, w);
  check_reduction(t, w, red1);
  CHECK(red1.vertex_map[front] == red1.vertex_map[back]);
  CHECK(wpt::dim_coordinate_space(red1.tree) == 3);
  {
    wpt::AxisScript s;
    s.axis.resize(3);
    s.axis[2].uppers = {feeder()};
    s.links = {kV, kR};
    const auto at = wpt::assemble(s);
    WeightAssignment ew;
    ew.H[axis_vertical(at.tree, 0)] = Rat(1, 4);
    ew.H[at.upper_edges[2][0][1]] = Rat(1, 8);
    ew.H[at.upper_edges[2][0][2]] = Rat(1, 4);
    ew.W[at.tree.real_order[2]] = Rat(1, 2);
    wpt::symmetrize_weights(at.tree, ew);
    CHECK(wcanon(red1.tree, red1.weights) == wcanon(at.tree, ew));
  }

  // second step: one chain stub goes to zero and the chain self-glues
  const int ce2 = red1.edge_map[ce];
  const int cw2 = red1.edge_map[cw];
  const int r2 = red1.edge_map[r];
  REQUIRE(ce2 >= 0);
  WeightAssignment w2;
  w2.H[r2] = Rat(1, 4);
  w2.H[ce2] = Rat(0);
  w2.H[cw2] = Rat(3, 8);
  w2.W[red1.vertex_map[front]] = Rat(1, 2);
  wpt::symmetrize_weights(red1.tree, w2);

  const auto red2 = wpt::zip(red1.tree, w2, ce2);
  check_reduction(red1.tree, w2, red2);
  CHECK(wpt::dim_coordinate_space(red2.tree) == 2);
  const int mid2 = red2.vertex_map[red1.vertex_map[mid]];
  CHECK(wpt::is_branchpoint(red2.tree, mid2));
  {
    wpt::AxisScript s;
    s.axis.resize(3);
    s.axis[2].uppers = {UpperNode{Link::InEdge, {stub()}}};
    s.links = {kV, kR};
    const auto at = wpt::assemble(s);
    WeightAssignment ew;
    ew.H[axis_vertical(at.tree, 0)] = Rat(1, 4);
    ew.H[at.upper_edges[2][0][1]] = Rat(3, 8);
    ew.W[at.tree.real_order[2]] = Rat(1, 2);
    wpt::symmetrize_weights(at.tree, ew);
    CHECK(wcanon(red2.tree, red2.weights) == wcanon(at.tree, ew));
  }

  // the double crossing sits on the outer boundary in every direction
  const auto lat = wpt::face_lattice(red2.tree);
  REQUIRE(lat.size() == 3);
  int zero_faces = 0, facets = 0;
  for (const auto& fd : lat) {
    CHECK(!fd.inner);
    CHECK(!fd.outer_reason.empty());
    CHECK(!fd.subordinate.has_value());
    fd.zero_orbits.empty() ? ++facets : ++zero_faces;
  }
  CHECK(zero_faces == 2);
  CHECK(facets == 1);
}

// ---------------------------------------------------------------------------
// Face lattices of the shipped graphs.

namespace {

// The unique descriptor with the given zero orbit set and width order.
const wpt::FaceDescriptor& find_face(const std::vector<wpt::FaceDescriptor>& lat,
                                     const std::vector<int>& zero_orbits,
                                     const std::vector<std::pair<int, int>>& width_order = {}) {
  const wpt::FaceDescriptor* hit = nullptr;
  for (const auto& fd : lat)
    if (fd.zero_orbits == zero_orbits && (width_order.empty() || fd.width_order == width_order)) {
      REQUIRE(hit == nullptr);
      hit = &fd;
    }
  REQUIRE(hit != nullptr);
  return *hit;
}

std::string script_canon(const wpt::AxisScript& s) {
  return wpt::canonical_form(wpt::assemble(s).tree);
}

}  // namespace

TEST_CASE("face lattice of the three-chain graph is entirely outer") {
  const auto doc = load("h2k3_three_chains");
  const PlanarTree& t = doc.tree;
  const auto lat = wpt::face_lattice(t);
  REQUIRE(lat.size() == 6);
  for (const auto& fd : lat) {
    CHECK(!fd.inner);
    CHECK(!fd.outer_reason.empty());
    CHECK(fd.sample.has_value());
    CHECK(!fd.subordinate.has_value());
  }
  // the middle-chain face splits into two cells by the order of the two walls
  const int sL = t.edges[horizontal_at(t, t.real_order[1])].b;
  const int sR = t.edges[horizontal_at(t, t.real_order[4])].b;
  const int lo = std::min(sL, sR), hi = std::max(sL, sR);
  (void)find_face(lat, {1}, {{lo, hi}});
  (void)find_face(lat, {1}, {{hi, lo}});
  (void)find_face(lat, {0});
  (void)find_face(lat, {2});
  int facets = 0;
  for (const auto& fd : lat)
    if (fd.zero_orbits.empty()) {
      ++facets;
      // a saddle at zero width flattens both of its incoming real edges
      CHECK(fd.width_equalities.size() == 2);
    }
  CHECK(facets == 2);
}

TEST_CASE("face lattice of the stub comb") {
  const auto doc = load("h2k1_stub_comb");
  const PlanarTree& t = doc.tree;
  CHECK(wpt::dim_coordinate_space(t) == 4);
  const auto lat = wpt::face_lattice(t);
  REQUIRE(lat.size() == 5);
  for (const auto& fd : lat) {
    REQUIRE(fd.zero_orbits.size() == 1);  // no saddles, hence no width facets
    CHECK(fd.width_order.empty());
  }

  // collapsing a real chain edge is admissible; collapsing a stub pair would
  // fuse its two tips through the axis vertex
  for (int oi = 0; oi < 3; ++oi) {
    const auto& fd = find_face(lat, {oi});
    CHECK(fd.inner);
    CHECK(fd.dim == 3);
    REQUIRE(fd.subordinate.has_value());
    CHECK(wpt::invariants(*fd.subordinate) == wpt::invariants(t));
  }
  for (int oi = 3; oi < 5; ++oi) {
    const auto& fd = find_face(lat, {oi});
    CHECK(!fd.inner);
    CHECK(!fd.outer_reason.empty());
  }

  {
    wpt::AxisScript s;  // leftmost chain edge collapsed
    s.axis.resize(3);
    s.axis[0].uppers = {stub()};
    s.axis[1].uppers = {stub()};
    s.links = {kV, kV};
    CHECK(wpt::canonical_form(*find_face(lat, {0}).subordinate) == script_canon(s));
  }
  {
    wpt::AxisScript s;  // middle edge collapsed: both stub pairs on one vertex
    s.axis.resize(3);
    s.axis[1].uppers = {stub(), stub()};
    s.links = {kV, kV};
    CHECK(wpt::canonical_form(*find_face(lat, {1}).subordinate) == script_canon(s));
  }
  {
    wpt::AxisScript s;  // rightmost chain edge collapsed
    s.axis.resize(3);
    s.axis[1].uppers = {stub()};
    s.axis[2].uppers = {stub()};
    s.links = {kV, kV};
    CHECK(wpt::canonical_form(*find_face(lat, {2}).subordinate) == script_canon(s));
  }
}

TEST_CASE("face lattice of the cross chain") {
  const auto doc = load("h2k2_cross_chain");
  const PlanarTree& t = doc.tree;
  const auto lat = wpt::face_lattice(t);
  REQUIRE(lat.size() == 5);
  CHECK(find_face(lat, {0}).inner);
  CHECK(find_face(lat, {1}).inner);
  CHECK(!find_face(lat, {2}).inner);  // both endpoints of the last chain are branchpoints
  CHECK(!find_face(lat, {3}).inner);  // stub pair: two tips through one vertex
  const auto& facet = find_face(lat, {});
  CHECK(!facet.inner);
  CHECK(facet.width_equalities.size() == 2);  // both incoming edges of the saddle flatten
}

TEST_CASE("face lattice of the floating chain") {
  const auto doc = load("h2k1_floating_chain");
  const PlanarTree& t = doc.tree;
  CHECK(wpt::dim_coordinate_space(t) == 4);
  const auto lat = wpt::face_lattice(t);
  REQUIRE(lat.size() == 5);
  for (const auto& fd : lat) {
    if (!fd.inner) continue;
    CHECK(fd.dim == 3);
    REQUIRE(fd.subordinate.has_value());
    CHECK(wpt::invariants(*fd.subordinate) == wpt::invariants(t));
    CHECK(wpt::validate_topology(*fd.subordinate).pass());
    CHECK(wpt::dim_coordinate_space(*fd.subordinate) == 3);
  }

  // collapsing a real chain edge would push the side chain onto an end of the
  // axis, which no graph of the family can carry
  CHECK(!find_face(lat, {0}).inner);
  CHECK(!find_face(lat, {1}).inner);
  CHECK(!find_face(lat, {0}).outer_reason.empty());
  // either chain stub glues the chain onto itself: the same subordinate point
  const auto& fe = find_face(lat, {2});
  const auto& fw = find_face(lat, {3});
  REQUIRE(fe.inner);
  REQUIRE(fw.inner);
  CHECK(wpt::canonical_form(*fe.subordinate) == wpt::canonical_form(*fw.subordinate));
  {
    wpt::AxisScript s;
    s.axis.resize(3);
    s.axis[1].uppers = {UpperNode{Link::OutEdge, {UpperNode{Link::InEdge, {stub()}}}}};
    s.links = {kV, kV};
    CHECK(wpt::canonical_form(*fe.subordinate) == script_canon(s));
  }
  // the saddle width facet absorbs the whole chain into the axis vertex
  const auto& facet = find_face(lat, {});
  REQUIRE(facet.inner);
  CHECK(facet.width_equalities.size() == 4);
  {
    wpt::AxisScript s;
    s.axis.resize(3);
    s.axis[1].uppers = {stub(), stub()};
    s.links = {kV, kV};
    CHECK(wpt::canonical_form(*facet.subordinate) == script_canon(s));
  }
}

TEST_CASE("face lattice of the chain-fed crossing") {
  const auto doc = load("h2k1_chain_fed_crossing");
  const PlanarTree& t = doc.tree;
  const auto lat = wpt::face_lattice(t);
  REQUIRE(lat.size() == 5);

  CHECK(!find_face(lat, {0}).inner);  // the real chain edge joins two branchpoints
  const auto& fe = find_face(lat, {1});
  const auto& fw = find_face(lat, {2});
  CHECK(fe.inner);
  CHECK(fw.inner);
  CHECK(wpt::canonical_form(*fe.subordinate) == wpt::canonical_form(*fw.subordinate));
  {
    wpt::AxisScript s;  // chain self-glued over the back saddle
    s.axis.resize(4);
    s.axis[3].uppers = {UpperNode{Link::InEdge, {stub()}}};
    s.links = {kV, kR, kL};
    CHECK(wpt::canonical_form(*fe.subordinate) == script_canon(s));
  }

  // two genuine width facets: the saddles tie, or the back saddle hits zero
  std::vector<const wpt::FaceDescriptor*> facets;
  for (const auto& fd : lat)
    if (fd.zero_orbits.empty()) facets.push_back(&fd);
  REQUIRE(facets.size() == 2);
  for (const auto* fd : facets) {
    CHECK(fd->inner);
    CHECK(fd->dim == 3);
  }
  const auto* tie = facets[0]->width_equalities.size() == 1 ? facets[0] : facets[1];
  const auto* base = facets[0]->width_equalities.size() == 1 ? facets[1] : facets[0];
  REQUIRE(tie->width_equalities.size() == 1);
  REQUIRE(base->width_equalities.size() == 2);
  {
    wpt::AxisScript s;  // equal widths: the flat real edge contracts
    s.axis.resize(3);
    s.axis[2].uppers = {feeder()};
    s.links = {kV, kR};
    CHECK(wpt::canonical_form(*tie->subordinate) == script_canon(s));
  }
  {
    wpt::AxisScript s;  // back saddle at zero width: the feeder joins the axis
    s.axis.resize(4);
    s.axis[3].uppers = {stub(), stub()};
    s.links = {kV, kR, kL};
    CHECK(wpt::canonical_form(*base->subordinate) == script_canon(s));
  }
}

TEST_CASE("face lattice of the crossing host subdivides by wall order") {
  const Host h = crossing_host(Rat(1, 3), Rat(2, 3));
  const PlanarTree& t = h.at.tree;
  CHECK(wpt::dim_coordinate_space(t) == 10);
  const auto lat = wpt::face_lattice(t);
  REQUIRE(lat.size() == 12);

  const auto orbits = wpt::vertical_orbits(t);
  auto orbit_of = [&](int edge) {
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if (orbits[i].representative == edge) return static_cast<int>(i);
    REQUIRE(false);
    return -1;
  };
  // the outermost axis edges would push a side chain onto an axis end
  const int left_orbit = orbit_of(h.at.axis_edges[0]);
  const int right_orbit = orbit_of(h.at.axis_edges[2]);
  int inner_count = 0;
  for (const auto& fd : lat) {
    if (fd.inner) {
      ++inner_count;
      CHECK(fd.dim == 9);
    } else {
      REQUIRE(fd.zero_orbits.size() == 1);
      const int oi = fd.zero_orbits[0];
      CHECK((oi == left_orbit || oi == right_orbit));
    }
  }
  CHECK(inner_count == 10);

  // the zero face of the crossing splits into two cells with distinct quotients
  const int S = h.at.upper_vertices[1][0][0];
  const int Sp = h.at.upper_vertices[2][0][0];
  const int r_orbit = orbit_of(h.R);
  const auto& up = find_face(lat, {r_orbit}, {{S, Sp}});
  const auto& down = find_face(lat, {r_orbit}, {{Sp, S}});
  CHECK(wpt::canonical_form(*up.subordinate) != wpt::canonical_form(*down.subordinate));
  {
    wpt::AxisScript s;  // single-feeder saddle below the double-feeder one
    UpperNode top{Link::OutEdge, {feeder(), feeder()}};
    UpperNode bottom{Link::OutEdge, {top, feeder()}};
    s.axis.resize(3);
    s.axis[1].uppers = {bottom};
    s.links = {kV, kV};
    CHECK(wpt::canonical_form(*up.subordinate) == script_canon(s));
  }
  {
    wpt::AxisScript s;  // double-feeder saddle below the single-feeder one;
                        // the ladder leaves through the former wall-end ray
    UpperNode top{Link::OutEdge, {feeder()}};
    UpperNode bottom{Link::OutEdge, {feeder(), feeder(), top}};
    s.axis.resize(3);
    s.axis[1].uppers = {bottom};
    s.links = {kV, kV};
    CHECK(wpt::canonical_form(*down.subordinate) == script_canon(s));
  }

  int facets = 0;
  for (const auto& fd : lat)
    if (fd.zero_orbits.empty()) ++facets;
  CHECK(facets == 2);
}

// ---------------------------------------------------------------------------
// Catalog-wide properties.

namespace {

std::vector<PlanarTree> genus_two_catalog() {
  std::vector<PlanarTree> out;
  for (int k = 1; k <= 3; ++k) {
    wpt::EnumerateOptions opt;
    opt.genus = 2;
    opt.ovals = k;
    for (const auto& g : wpt::enumerate_graphs(opt)) out.push_back(g.tree);
  }
  return out;
}

}  // namespace

TEST_CASE("reduction of strict weights is the identity") {
  for (const PlanarTree& t : genus_two_catalog()) {
    const auto w = generic_weights(t);
    REQUIRE(wpt::validate_weights(t, w, wpt::WeightMode::Strict).pass());
    const auto red = wpt::reduce(t, w);
    CHECK(red.tree.vertex_count() == t.vertex_count());
    CHECK(red.tree.edge_count() == t.edge_count());
    for (int v = 0; v < t.vertex_count(); ++v) CHECK(red.vertex_map[v] == v);
    for (int e = 0; e < t.edge_count(); ++e) CHECK(red.edge_map[e] == e);
    CHECK(wcanon(red.tree, red.weights) == wcanon(t, w));
  }
}

TEST_CASE("single zero orbits reduce consistently across the catalog") {
  for (const PlanarTree& t : genus_two_catalog()) {
    const auto orbits = wpt::vertical_orbits(t);
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      CAPTURE(wpt::canonical_form(t).substr(0, 24));
      CAPTURE(i);
      const auto w = generic_weights(t, {orbits[i].representative});
      REQUIRE(wpt::validate_weights(t, w, wpt::WeightMode::Weak).pass());
      bool zip_ok = false;
      try {
        const auto red = wpt::zip(t, w, orbits[i].representative);
        zip_ok = true;
        check_reduction(t, w, red);
        // the zipped orbit is gone and no other vertical was zero
        CHECK(static_cast<int>(wpt::vertical_orbits(red.tree).size()) ==
              static_cast<int>(orbits.size()) - 1);
        for (const auto& [e, hv] : red.weights.H) {
          (void)e;
          CHECK(hv > 0);
        }
      } catch (const wpt::OuterFaceError&) {
      }
      try {
        const auto full = wpt::reduce(t, w);
        CHECK(zip_ok);  // the reduction starts with exactly that zip
        CHECK(wpt::invariants(full.tree) == wpt::invariants(t));
        CHECK(wpt::validate_weights(full.tree, full.weights, wpt::WeightMode::Strict).pass());
      } catch (const wpt::OuterFaceError&) {
        CHECK(!zip_ok);
      }
    }
  }
}

TEST_CASE("zips of disjoint zero orbits commute") {
  for (const PlanarTree& t : genus_two_catalog()) {
    const auto orbits = wpt::vertical_orbits(t);
    for (std::size_t i = 0; i < orbits.size(); ++i)
      for (std::size_t j = i + 1; j < orbits.size(); ++j) {
        CAPTURE(wpt::canonical_form(t).substr(0, 24));
        CAPTURE(i);
        CAPTURE(j);
        const auto w = generic_weights(
            t, {orbits[i].representative, orbits[j].representative});
        auto run = [&](int first, int second) -> std::optional<std::string> {
          try {
            const auto r1 = wpt::zip(t, w, first);
            const int m = r1.edge_map[second];
            REQUIRE(m >= 0);
            const auto r2 = wpt::zip(r1.tree, r1.weights, m);
            return wcanon(r2.tree, r2.weights);
          } catch (const wpt::OuterFaceError&) {
            return std::nullopt;
          }
        };
        const auto ab = run(orbits[i].representative, orbits[j].representative);
        const auto ba = run(orbits[j].representative, orbits[i].representative);
        CHECK(ab.has_value() == ba.has_value());
        if (ab && ba) CHECK(*ab == *ba);
      }
  }
}

TEST_CASE("two zero orbits drop two dimensions") {
  const auto doc = load("h2k1_stub_comb");
  const PlanarTree& t = doc.tree;
  WeightAssignment w;
  w.H[axis_vertical(t, 0)] = Rat(0);
  w.H[axis_vertical(t, 1)] = Rat(1, 3);
  w.H[axis_vertical(t, 2)] = Rat(0);
  w.H[upper_stub_at(t, t.real_order[1])] = Rat(1, 6);
  w.H[upper_stub_at(t, t.real_order[2])] = Rat(1, 6);
  wpt::symmetrize_weights(t, w);

  const auto red = wpt::reduce(t, w);
  check_reduction(t, w, red);
  CHECK(wpt::dim_coordinate_space(t) == 4);
  CHECK(wpt::dim_coordinate_space(red.tree) == 2);

  wpt::AxisScript s;
  s.axis.resize(2);
  s.axis[0].uppers = {stub()};
  s.axis[1].uppers = {stub()};
  s.links = {kV};
  const auto at = wpt::assemble(s);
  WeightAssignment ew;
  ew.H[axis_vertical(at.tree, 0)] = Rat(1, 3);
  ew.H[upper_stub_at(at.tree, at.tree.real_order[0])] = Rat(1, 6);
  ew.H[upper_stub_at(at.tree, at.tree.real_order[1])] = Rat(1, 6);
  wpt::symmetrize_weights(at.tree, ew);
  CHECK(wcanon(red.tree, red.weights) == wcanon(at.tree, ew));
}
