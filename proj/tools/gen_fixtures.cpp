// Regenerates the golden graph fixtures under tests/fixtures/.
//
// Each fixture is a reflection-symmetric weighted tree built from an explicit
// axis script, validated, and serialized with its exact rational weights.
// Run from the repository root (or pass the output directory as argv[1]).

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "wpt/build.hpp"
#include "wpt/graph.hpp"
#include "wpt/json_io.hpp"

namespace {

using wpt::AssembledTree;
using wpt::AxisLink;
using wpt::AxisScript;
using wpt::AxisVertex;
using wpt::Rat;
using wpt::UpperNode;
using wpt::WeightAssignment;

constexpr auto kV = AxisLink::VerticalEdge;
constexpr auto kR = AxisLink::RightwardEdge;
constexpr auto kL = AxisLink::LeftwardEdge;

UpperNode stub() { return UpperNode{UpperNode::Link::Vertical, {}}; }

// A two-edge vertical chain floating above the axis, middle vertex feeding a
// horizontal edge toward the parent below. Rooted at the feeding edge:
// parent <- midpoint, midpoint carrying leaf edges east and west.
UpperNode chain_feeding_down() {
  UpperNode mid{UpperNode::Link::InEdge, {stub(), stub()}};
  return mid;
}

// Same chain, but attached through an intermediate saddle: the parent sends an
// outgoing edge up into a saddle which also receives the chain midpoint.
UpperNode chain_over_saddle() {
  UpperNode saddle{UpperNode::Link::OutEdge, {chain_feeding_down()}};
  return saddle;
}

struct Fixture {
  std::string name;
  AxisScript script;
  // Weight values in script order: first the axis links that are vertical
  // edges (left to right), then the decoration edges of each axis vertex in
  // preorder, skipping horizontal edges. Width values keyed by axis position
  // (-1 for none) or resolved by saddle scan below.
  std::vector<Rat> vertical_weights;
  std::vector<Rat> widths;  // one value per saddle orbit, in representative order
};

void emit(const Fixture& fx, const std::filesystem::path& dir) {
  const AssembledTree at = wpt::assemble(fx.script);

  WeightAssignment w;
  std::size_t next = 0;
  auto take = [&]() {
    if (next >= fx.vertical_weights.size())
      throw std::runtime_error(fx.name + ": not enough vertical weights");
    return fx.vertical_weights[next++];
  };
  for (std::size_t i = 0; i < at.axis_edges.size(); ++i) {
    const int e = at.axis_edges[i];
    if (at.tree.edges[e].kind == wpt::EdgeKind::Vertical) w.H[e] = take();
  }
  for (const auto& per_vertex : at.upper_edges)
    for (const auto& deco : per_vertex)
      for (const int e : deco)
        if (at.tree.edges[e].kind == wpt::EdgeKind::Vertical) w.H[e] = take();
  if (next != fx.vertical_weights.size())
    throw std::runtime_error(fx.name + ": leftover vertical weights");

  const std::vector<int> saddles = wpt::saddle_orbit_representatives(at.tree);
  if (saddles.size() != fx.widths.size())
    throw std::runtime_error(fx.name + ": saddle count mismatch");
  for (std::size_t i = 0; i < saddles.size(); ++i) w.W[saddles[i]] = fx.widths[i];

  wpt::symmetrize_weights(at.tree, w);

  const auto topo = wpt::validate_topology(at.tree);
  if (!topo.pass()) throw std::runtime_error(fx.name + ": topology invalid");
  const auto wr = wpt::validate_weights(at.tree, w, wpt::WeightMode::Strict);
  if (!wr.pass()) {
    std::string msg = fx.name + ": weights invalid";
    for (const auto& m : wr.messages) msg += "\n  " + m;
    throw std::runtime_error(msg);
  }

  const auto inv = wpt::invariants(at.tree);
  const std::filesystem::path file = dir / (fx.name + ".json");
  wpt::save_graph(file.string(), at.tree, &w);
  std::printf("%-28s g=%d k=%d dim=%d  %s\n", fx.name.c_str(), inv.genus, inv.ovals,
              wpt::dim_coordinate_space(at.tree), wpt::canonical_form(at.tree).c_str());
}

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> out;

  // Genus 2, three real ovals: three single real edges joined by two saddles.
  {
    Fixture fx;
    fx.name = "h2k3_three_chains";
    fx.script.axis.resize(8);
    fx.script.links = {kV, kR, kL, kV, kR, kL, kV};
    fx.vertical_weights = {Rat(1, 2), Rat(1, 3), Rat(1, 6)};
    fx.widths = {Rat(1, 2), Rat(1, 3)};
    out.push_back(std::move(fx));
  }

  // Genus 2, two real ovals (three graphs).
  {
    Fixture fx;  // real chain with an axis crossing, then a separate real edge
    fx.name = "h2k2_cross_chain";
    fx.script.axis.resize(6);
    fx.script.axis[1].uppers = {stub()};
    fx.script.links = {kV, kV, kR, kL, kV};
    fx.vertical_weights = {Rat(1, 8), Rat(1, 8), Rat(1, 4), Rat(1, 4)};
    fx.widths = {Rat(1, 2)};
    out.push_back(std::move(fx));
  }
  {
    Fixture fx;  // stub pair at the left axis end feeding the first saddle
    fx.name = "h2k2_corner_stub";
    fx.script.axis.resize(7);
    fx.script.axis[0].uppers = {stub()};
    fx.script.links = {kR, kL, kV, kR, kL, kV};
    fx.vertical_weights = {Rat(1, 3), Rat(1, 3), Rat(1, 6)};
    fx.widths = {Rat(1, 4), Rat(1, 2)};
    out.push_back(std::move(fx));
  }
  {
    Fixture fx;  // stub-pair vertex with outgoing edges into saddles on both sides
    fx.name = "h2k2_stub_between_saddles";
    fx.script.axis.resize(7);
    fx.script.axis[3].uppers = {stub()};
    fx.script.links = {kV, kR, kL, kR, kL, kV};
    fx.vertical_weights = {Rat(1, 4), Rat(1, 4), Rat(1, 4)};
    fx.widths = {Rat(1, 3), Rat(1, 2)};
    out.push_back(std::move(fx));
  }

  // Genus 2, one real oval (six graphs).
  {
    Fixture fx;  // real chain of three edges with two axis crossings
    fx.name = "h2k1_stub_comb";
    fx.script.axis.resize(4);
    fx.script.axis[1].uppers = {stub()};
    fx.script.axis[2].uppers = {stub()};
    fx.script.links = {kV, kV, kV};
    fx.vertical_weights = {Rat(1, 6), Rat(1, 6), Rat(1, 6), Rat(1, 10), Rat(3, 20)};
    fx.widths = {};
    out.push_back(std::move(fx));
  }
  {
    Fixture fx;  // floating chain above the axis midpoint, joined via a saddle
    fx.name = "h2k1_floating_chain";
    fx.script.axis.resize(3);
    fx.script.axis[1].uppers = {chain_over_saddle()};
    fx.script.links = {kV, kV};
    fx.vertical_weights = {Rat(1, 4), Rat(1, 4), Rat(1, 8), Rat(1, 8)};
    fx.widths = {Rat(1, 2)};
    out.push_back(std::move(fx));
  }
  {
    Fixture fx;  // two stub-pair ends feeding saddles across a central real edge
    fx.name = "h2k1_twin_saddles";
    fx.script.axis.resize(6);
    fx.script.axis[0].uppers = {stub()};
    fx.script.axis[5].uppers = {stub()};
    fx.script.links = {kR, kL, kV, kR, kL};
    fx.vertical_weights = {Rat(1, 5), Rat(3, 20), Rat(1, 4)};
    fx.widths = {Rat(2, 5), Rat(3, 5)};
    out.push_back(std::move(fx));
  }
  {
    Fixture fx;  // floating chain feeding an axis vertex behind a saddle
    fx.name = "h2k1_chain_fed_crossing";
    fx.script.axis.resize(4);
    fx.script.axis[3].uppers = {chain_feeding_down()};
    fx.script.links = {kV, kR, kL};
    fx.vertical_weights = {Rat(1, 4), Rat(1, 8), Rat(1, 4)};
    fx.widths = {Rat(2, 3), Rat(1, 3)};
    out.push_back(std::move(fx));
  }
  {
    Fixture fx;  // axis crossing inside the real chain, stub pair past the saddle
    fx.name = "h2k1_cross_and_saddle";
    fx.script.axis.resize(5);
    fx.script.axis[1].uppers = {stub()};
    fx.script.axis[4].uppers = {stub()};
    fx.script.links = {kV, kV, kR, kL};
    fx.vertical_weights = {Rat(1, 6), Rat(1, 6), Rat(1, 8), Rat(5, 24)};
    fx.widths = {Rat(1, 2)};
    out.push_back(std::move(fx));
  }
  {
    Fixture fx;  // stub-pair vertices chained through two saddles
    fx.name = "h2k1_stub_saddle_ladder";
    fx.script.axis.resize(6);
    fx.script.axis[3].uppers = {stub()};
    fx.script.axis[5].uppers = {stub()};
    fx.script.links = {kV, kR, kL, kR, kL};
    fx.vertical_weights = {Rat(1, 5), Rat(1, 4), Rat(3, 20)};
    fx.widths = {Rat(1, 3), Rat(1, 2)};
    out.push_back(std::move(fx));
  }

  // Genus 6, two real ovals: the wide worked example used by the period tests.
  // Axis: end - H10 - column base - H5 - bp -> saddle <- bp - H4 - chain base
  // - H1 - end. The column base carries a two-edge column whose middle vertex
  // feeds a saddle shared with a floating chain; the right chain base hangs a
  // floating chain through its own saddle.
  {
    Fixture fx;
    fx.name = "periods_g6k2";
    fx.script.axis.resize(7);
    UpperNode column{UpperNode::Link::Vertical, {chain_over_saddle(), stub()}};
    fx.script.axis[1].uppers = {column};
    fx.script.axis[5].uppers = {chain_over_saddle()};
    fx.script.links = {kV, kV, kR, kL, kV, kV};
    fx.vertical_weights = {
        Rat(21, 120),                            // H10
        Rat(16, 120),                            // H5
        Rat(13, 120), Rat(10, 120),              // H4, H1
        Rat(4, 120),                             // H6 (column lower edge)
        Rat(5, 120),  Rat(7, 120),               // H7, H8 (floating chain)
        Rat(9, 120),                             // H9 (column upper edge)
        Rat(2, 120),  Rat(3, 120),               // H2, H3 (right chain)
    };
    fx.widths = {Rat(1, 2), Rat(1, 3), Rat(2, 3)};
    out.push_back(std::move(fx));
  }

  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "tests/fixtures";
  std::filesystem::create_directories(dir);
  try {
    for (const Fixture& fx : make_fixtures()) emit(fx, dir);
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  }
  return 0;
}
