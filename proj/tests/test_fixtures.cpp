// Golden fixtures: every shipped graph document loads, validates, and matches
// the enumerated catalogs exactly (up to the left-right mirror).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wpt/enumerate.hpp"
#include "wpt/graph.hpp"
#include "wpt/json_io.hpp"

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(WPT_FIXTURES_DIR) + "/" + name + ".json";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct NamedFixture {
  std::string name;
  int genus;
  int ovals;
  int dim;
  bool mirror_symmetric;
};

const std::vector<NamedFixture>& all_fixtures() {
  static const std::vector<NamedFixture> table = {
      {"h2k3_three_chains", 2, 3, 4, true},
      {"h2k2_cross_chain", 2, 2, 4, false},
      {"h2k2_corner_stub", 2, 2, 4, false},
      {"h2k2_stub_between_saddles", 2, 2, 4, true},
      {"h2k1_stub_comb", 2, 1, 4, true},
      {"h2k1_floating_chain", 2, 1, 4, true},
      {"h2k1_twin_saddles", 2, 1, 4, true},
      {"h2k1_chain_fed_crossing", 2, 1, 4, false},
      {"h2k1_cross_and_saddle", 2, 1, 4, false},
      {"h2k1_stub_saddle_ladder", 2, 1, 4, false},
      {"periods_g6k2", 6, 2, 12, false},
  };
  return table;
}

std::set<std::string> catalog_keys_with_mirrors(int genus, int ovals) {
  std::set<std::string> keys;
  for (const auto& fx : all_fixtures()) {
    if (fx.genus != genus || fx.ovals != ovals) continue;
    const auto doc = wpt::load_graph(fixture_path(fx.name));
    keys.insert(wpt::canonical_form(doc.tree));
    keys.insert(wpt::canonical_form(wpt::mirror(doc.tree)));
  }
  return keys;
}

}  // namespace

TEST_CASE("every fixture loads, validates, and round-trips byte-for-byte") {
  for (const auto& fx : all_fixtures()) {
    CAPTURE(fx.name);
    const std::string text = slurp(fixture_path(fx.name));
    const auto doc = wpt::parse_graph_json(text);

    const auto topo = wpt::validate_topology(doc.tree);
    CHECK(topo.pass());
    REQUIRE(doc.weights.has_value());
    const auto wr = wpt::validate_weights(doc.tree, *doc.weights, wpt::WeightMode::Strict);
    CHECK(wr.pass());

    const auto inv = wpt::invariants(doc.tree);
    CHECK(inv.genus == fx.genus);
    CHECK(inv.ovals == fx.ovals);
    CHECK(wpt::dim_coordinate_space(doc.tree) == fx.dim);

    const std::string mirror_key = wpt::canonical_form(wpt::mirror(doc.tree));
    CHECK((mirror_key == wpt::canonical_form(doc.tree)) == fx.mirror_symmetric);

    CHECK(wpt::to_json(doc.tree, &*doc.weights) == text);
    const auto again = wpt::parse_graph_json(wpt::to_json(doc.tree, &*doc.weights));
    CHECK(wpt::canonical_form_weighted(again.tree, *again.weights) ==
          wpt::canonical_form_weighted(doc.tree, *doc.weights));
  }
}

TEST_CASE("fixtures plus mirrors are exactly the full-dimensional catalogs") {
  const std::vector<std::pair<int, int>> components = {{2, 3}, {2, 2}, {2, 1}};
  for (const auto& [genus, ovals] : components) {
    CAPTURE(genus);
    CAPTURE(ovals);
    std::set<std::string> enumerated;
    for (const auto& g : wpt::enumerate_graphs({genus, ovals}))
      enumerated.insert(g.key);
    CHECK(enumerated == catalog_keys_with_mirrors(genus, ovals));
  }
}

TEST_CASE("differential orders on the chain-fed crossing example") {
  const auto doc = wpt::load_graph(fixture_path("h2k1_chain_fed_crossing"));
  const auto& t = doc.tree;

  // Along the axis, left to right: two simple branchpoints, then the saddle
  // fed from both sides, then the doubly-fed crossing.
  std::vector<int> axis_orders;
  for (const int v : t.real_order) axis_orders.push_back(wpt::ord(t, v));
  CHECK(axis_orders == std::vector<int>{-1, -1, 2, 2});

  // Off the axis each half carries one order-zero chain midpoint and two
  // simple branchpoint ends.
  std::multiset<int> upper_orders;
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.is_upper(v)) upper_orders.insert(wpt::ord(t, v));
  CHECK(upper_orders == std::multiset<int>{-1, -1, 0});

  // Total multiplicity of the quadratic differential's divisor is -2.
  int total = 0;
  for (int v = 0; v < t.vertex_count(); ++v) total += wpt::ord(t, v);
  CHECK(total == -2);

  // The crossing carries the smaller width: its outgoing edge points into
  // the saddle.
  REQUIRE(doc.weights.has_value());
  const auto& w = *doc.weights;
  const int crossing = t.real_order[3];
  const int saddle = t.real_order[2];
  CHECK(w.W.at(crossing) < w.W.at(saddle));
}

TEST_CASE("wide period example has the expected quotient structure") {
  const auto doc = wpt::load_graph(fixture_path("periods_g6k2"));
  const auto& t = doc.tree;

  CHECK(wpt::vertical_orbits(t).size() == 10);
  CHECK(wpt::saddle_orbit_representatives(t).size() == 3);

  // Branchpoints: four on the axis, five per off-axis half.
  int real_bp = 0, upper_bp = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (!wpt::is_branchpoint(t, v)) continue;
    if (t.is_real(v)) ++real_bp;
    if (t.is_upper(v)) ++upper_bp;
  }
  CHECK(real_bp == 4);
  CHECK(upper_bp == 5);

  // The half-weights sum to one half: the axis carries weight once, each
  // off-axis orbit twice.
  REQUIRE(doc.weights.has_value());
  wpt::Rat total = 0;
  for (const auto& orbit : wpt::vertical_orbits(t))
    total += doc.weights->H.at(orbit.representative) * (orbit.on_axis ? 1 : 2);
  CHECK(total == 1);
}
