#include "wpt/periods.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace wpt {

namespace {

// Virtual rays closing the boundary walk at the two ends of the axis.
constexpr int kRayRight = -2;
constexpr int kRayLeft = -3;

int edge_between(const PlanarTree& tree, int v, int u) {
  for (int e : tree.rotation.at(v)) {
    if (tree.other_end(e, v) == u) return e;
  }
  throw GraphError("no edge between on-axis vertices " + std::to_string(v) + " and " +
                   std::to_string(u));
}

// Incident edges of each vertex restricted to the closed upper half-plane, in
// counterclockwise order starting at the east direction. Real vertices list
// [east axis edge, upper edges..., west axis edge] with the virtual rays
// standing in for the missing axis edge at the two ends; upper vertices keep
// their full rotation (a cyclic list, so the starting point is irrelevant).
std::vector<std::vector<int>> walk_fans(const PlanarTree& tree) {
  std::vector<std::vector<int>> fans(tree.vertex_count());
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (tree.is_upper(v)) fans[v] = tree.rotation[v];
  }
  const auto& axis = tree.real_order;
  for (std::size_t p = 0; p < axis.size(); ++p) {
    const int v = axis[p];
    const int east = p + 1 < axis.size() ? edge_between(tree, v, axis[p + 1]) : kRayRight;
    const int west = p > 0 ? edge_between(tree, v, axis[p - 1]) : kRayLeft;
    // The upper edges sit strictly between the east and the west direction, so
    // walking the stored cyclic rotation from either axis edge meets them in
    // counterclockwise (east-to-west) order.
    const auto& rot = tree.rotation[v];
    const int anchor = east >= 0 ? east : west;
    const auto it = std::find(rot.begin(), rot.end(), anchor);
    if (it == rot.end()) throw GraphError("axis edge missing from rotation");
    const int start = static_cast<int>(it - rot.begin());
    std::vector<int> uppers;
    for (std::size_t s = 1; s < rot.size(); ++s) {
      const int e = rot[(start + s) % rot.size()];
      if (tree.is_upper(tree.other_end(e, v))) uppers.push_back(e);
    }
    fans[v].push_back(east);
    fans[v].insert(fans[v].end(), uppers.begin(), uppers.end());
    fans[v].push_back(west);
  }
  return fans;
}

struct WalkCore {
  std::vector<int> visit_vertex;                  // ordered from the right end
  std::vector<std::vector<int>> visit_crossings;  // cumulative per-orbit counts
  std::vector<int> traversals;                    // edge before each later visit
  std::vector<VerticalOrbit> orbits;
  std::vector<int> orbit_of_edge;  // -1 for horizontal edges
};

// Walk the boundary of the cut upper half-plane from the right end of the axis
// to the left end: arrive at a vertex along one edge, leave along the next one
// counterclockwise. Crossing counts accumulate per vertical orbit.
WalkCore trace_core(const PlanarTree& tree) {
  WalkCore core;
  core.orbits = vertical_orbits(tree);
  core.orbit_of_edge.assign(tree.edge_count(), -1);
  for (std::size_t i = 0; i < core.orbits.size(); ++i) {
    const int rep = core.orbits[i].representative;
    core.orbit_of_edge[rep] = static_cast<int>(i);
    core.orbit_of_edge[tree.sigma_e.at(rep)] = static_cast<int>(i);
  }
  const auto fans = walk_fans(tree);
  if (tree.real_order.empty()) throw GraphError("graph has no on-axis vertices");

  std::vector<int> crossings(core.orbits.size(), 0);
  int v = tree.real_order.back();
  int incoming = kRayRight;
  core.visit_vertex.push_back(v);
  core.visit_crossings.push_back(crossings);
  const int step_limit = 4 * tree.edge_count() + 4;
  for (int step = 0; step <= step_limit; ++step) {
    const auto& fan = fans[v];
    const auto it = std::find(fan.begin(), fan.end(), incoming);
    if (it == fan.end()) throw GraphError("boundary walk arrived along a missing edge");
    const int depart = fan[(it - fan.begin() + 1) % fan.size()];
    if (depart == kRayLeft) return core;
    if (depart == kRayRight) throw GraphError("boundary walk wrapped past the right end");
    if (tree.edges.at(depart).kind == EdgeKind::Vertical) {
      crossings[core.orbit_of_edge[depart]] += 1;
    }
    v = tree.other_end(depart, v);
    incoming = depart;
    core.traversals.push_back(depart);
    core.visit_vertex.push_back(v);
    core.visit_crossings.push_back(crossings);
  }
  throw GraphError("boundary walk did not terminate");
}

Rat orbit_weight(const PlanarTree&, const WeightAssignment& weights, const VerticalOrbit& o) {
  const auto it = weights.H.find(o.representative);
  if (it == weights.H.end()) {
    throw GraphError("missing H value for vertical edge " + std::to_string(o.representative));
  }
  return it->second;
}

Rat crossing_sum(const PlanarTree& tree, const WeightAssignment& weights,
                 const std::vector<VerticalOrbit>& orbits, const std::vector<int>& crossings) {
  Rat sum = 0;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (crossings[i] != 0) sum += Rat(crossings[i]) * orbit_weight(tree, weights, orbits[i]);
  }
  return sum;
}

long long labyrinth_choice_count(const PlanarTree& tree, bool* unique) {
  long long choices = 1;
  *unique = true;
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (!tree.is_upper(v) || !is_branchpoint(tree, v)) continue;
    choices *= tree.degree(v);
    if (tree.degree(v) > 1) *unique = false;
  }
  return choices;
}

std::vector<int> orbit_multiplicities(const std::vector<VerticalOrbit>& orbits) {
  std::vector<int> mult;
  mult.reserve(orbits.size());
  for (const auto& o : orbits) mult.push_back(o.on_axis ? 1 : 2);
  return mult;
}

// Projected image of one simplex corner: the orbit carries total weight one,
// split evenly over its edges, so the corner maps to column / multiplicity.
std::vector<Vec> projected_corners(const PeriodMatrix& matrix,
                                   const std::vector<VerticalOrbit>& orbits,
                                   const std::vector<int>& kept) {
  std::vector<Vec> corners;
  corners.reserve(orbits.size());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    Vec point;
    point.reserve(kept.size());
    const int mult = orbits[o].on_axis ? 1 : 2;
    for (int row : kept) point.push_back(Rat(matrix[row][o]) / mult);
    corners.push_back(std::move(point));
  }
  return corners;
}

std::vector<int> kept_rows(int genus, int ovals) {
  std::vector<int> kept;
  for (int s = 0; s <= genus; ++s) {
    if (ovals == 1 ? s >= 1 : s <= genus - 1) kept.push_back(s);
  }
  return kept;
}

// A zeroed face is outer exactly when collapsing the vanishing vertical edges
// would merge at least two branchpoints into one vertex.
bool face_lifts_outer(const PlanarTree& tree, const std::vector<VerticalOrbit>& orbits,
                      const std::vector<int>& zero_orbits) {
  std::vector<int> parent(tree.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int o : zero_orbits) {
    for (int e : {orbits[o].representative, tree.sigma_e.at(orbits[o].representative)}) {
      const int a = find(tree.edges[e].a);
      const int b = find(tree.edges[e].b);
      if (a != b) parent[a] = b;
    }
  }
  std::map<int, int> branch_count;
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (is_branchpoint(tree, v) && branch_count[find(v)]++ > 0) return true;
  }
  return false;
}

}  // namespace

BoundaryWalk boundary_walk(const PlanarTree& tree, const WeightAssignment& weights) {
  WalkCore core = trace_core(tree);
  BoundaryWalk walk;
  walk.orbits = core.orbits;
  walk.visits.reserve(core.visit_vertex.size());
  for (std::size_t i = core.visit_vertex.size(); i-- > 0;) {
    BoundaryWalk::Visit visit;
    visit.vertex = core.visit_vertex[i];
    visit.crossings = core.visit_crossings[i];
    visit.h = crossing_sum(tree, weights, core.orbits, visit.crossings);
    walk.visits.push_back(std::move(visit));
  }
  walk.traversals.assign(core.traversals.rbegin(), core.traversals.rend());
  return walk;
}

Rat boundary_H(const PlanarTree& tree, const WeightAssignment& weights, int vertex) {
  const BoundaryWalk walk = boundary_walk(tree, weights);
  const Rat* value = nullptr;
  for (const auto& visit : walk.visits) {
    if (visit.vertex != vertex) continue;
    if (value != nullptr && *value != visit.h) {
      throw GraphError("boundary value at vertex " + std::to_string(vertex) +
                       " depends on the visit");
    }
    value = &visit.h;
  }
  if (value == nullptr) {
    throw GraphError("vertex " + std::to_string(vertex) + " is not on the boundary walk");
  }
  return *value;
}

CanonicalLabyrinthTrace labyrinth_trace(const PlanarTree& tree) {
  bool unique = false;
  const long long choices = labyrinth_choice_count(tree, &unique);
  if (!unique) {
    throw ExceptionalGraphError("graph admits " + std::to_string(choices) +
                                    " distinguished cut systems; pick one explicitly",
                                choices);
  }
  const GraphInvariants inv = invariants(tree);
  const WalkCore core = trace_core(tree);

  CanonicalLabyrinthTrace trace;
  std::map<int, int> sign_of_edge;
  int upper_visits = 0;
  for (std::size_t i = 0; i < core.visit_vertex.size(); ++i) {
    const int v = core.visit_vertex[i];
    if (tree.is_upper(v) && is_branchpoint(tree, v)) {
      trace.touch_points.push_back(v);
      trace.touch_crossings.push_back(core.visit_crossings[i]);
      ++upper_visits;
    }
    if (i >= core.traversals.size()) break;
    const int e = core.traversals[i];
    if (core.orbit_of_edge[e] >= 0 && core.orbits[core.orbit_of_edge[e]].on_axis) {
      sign_of_edge[e] = (inv.genus + inv.ovals - 1 + upper_visits) % 2 == 0 ? +1 : -1;
    }
  }
  if (static_cast<int>(trace.touch_points.size()) != inv.genus + 1 - inv.ovals) {
    throw GraphError("unexpected number of upper branchpoint visits");
  }

  std::vector<SignedEdge> arc;
  for (std::size_t p = 0; p + 1 < tree.real_order.size(); ++p) {
    const int e = edge_between(tree, tree.real_order[p], tree.real_order[p + 1]);
    if (tree.edges[e].kind == EdgeKind::Vertical) {
      arc.push_back({e, sign_of_edge.at(e)});
    } else if (!arc.empty()) {
      trace.real_arcs.push_back(std::move(arc));
      arc.clear();
    }
  }
  if (!arc.empty()) trace.real_arcs.push_back(std::move(arc));
  if (static_cast<int>(trace.real_arcs.size()) != inv.ovals) {
    throw GraphError("unexpected number of real arcs");
  }
  return trace;
}

PeriodMatrix period_matrix(const PlanarTree& tree) {
  const GraphInvariants inv = invariants(tree);
  const CanonicalLabyrinthTrace trace = labyrinth_trace(tree);
  const auto orbits = vertical_orbits(tree);
  std::vector<int> orbit_of_edge(tree.edge_count(), -1);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    orbit_of_edge[orbits[i].representative] = static_cast<int>(i);
    orbit_of_edge[tree.sigma_e.at(orbits[i].representative)] = static_cast<int>(i);
  }

  PeriodMatrix matrix(inv.genus + 1, std::vector<long long>(orbits.size(), 0));
  for (int s = 0; s < inv.ovals; ++s) {
    for (const SignedEdge& se : trace.real_arcs[s]) {
      matrix[s][orbit_of_edge[se.edge]] += 2 * se.sign;
    }
  }
  for (int s = inv.ovals; s <= inv.genus; ++s) {
    const long long factor = (s + inv.genus) % 2 == 0 ? 4 : -4;
    const auto& crossings = trace.touch_crossings[s - inv.ovals];
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      matrix[s][o] = factor * crossings[o];
    }
  }
  return matrix;
}

PeriodVector period_map(const PlanarTree& tree, const WeightAssignment& weights) {
  const PeriodMatrix matrix = period_matrix(tree);
  const auto orbits = vertical_orbits(tree);
  PeriodVector periods;
  periods.reserve(matrix.size());
  for (const auto& row : matrix) {
    Rat value = 0;
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      if (row[o] != 0) value += Rat(row[o]) * orbit_weight(tree, weights, orbits[o]);
    }
    periods.push_back(std::move(value));
  }
  return periods;
}

ImagePolytope image_polytope(const PlanarTree& tree) {
  const GraphInvariants inv = invariants(tree);
  const PeriodMatrix matrix = period_matrix(tree);
  const auto orbits = vertical_orbits(tree);

  ImagePolytope image;
  image.kept = kept_rows(inv.genus, inv.ovals);
  image.corner_images = projected_corners(matrix, orbits, image.kept);
  image.hull = hull_of(image.corner_images);
  image.hull_vertices = vertices_of(image.hull);
  return image;
}

HPolytope width_cone(const PlanarTree& tree) {
  const auto saddles = saddle_orbit_representatives(tree);
  std::map<int, int> coordinate;
  for (std::size_t i = 0; i < saddles.size(); ++i) {
    coordinate[saddles[i]] = static_cast<int>(i);
    coordinate[tree.sigma_v.at(saddles[i])] = static_cast<int>(i);
  }

  HPolytope cone;
  cone.dim = static_cast<int>(saddles.size());
  std::set<std::pair<Vec, Rat>> seen;
  for (int e = 0; e < tree.edge_count(); ++e) {
    if (tree.edges[e].kind != EdgeKind::Horizontal) continue;
    Vec normal(cone.dim, Rat(0));
    if (tree.is_saddle(tree.edges[e].a)) normal[coordinate.at(tree.edges[e].a)] += 1;
    if (tree.is_saddle(tree.edges[e].b)) normal[coordinate.at(tree.edges[e].b)] -= 1;
    if (std::all_of(normal.begin(), normal.end(), [](const Rat& x) { return x == 0; })) continue;
    Rat offset = 0;
    normalize_constraint(normal, offset);
    if (seen.insert({normal, offset}).second) {
      cone.inequalities.push_back({std::move(normal), std::move(offset)});
    }
  }
  return cone;
}

LocalFiber local_fiber(const PlanarTree& tree, const PeriodVector& target) {
  const GraphInvariants inv = invariants(tree);
  if (static_cast<int>(target.size()) != inv.genus + 1) {
    throw GraphError("period target needs " + std::to_string(inv.genus + 1) + " components");
  }
  if (std::accumulate(target.begin(), target.end(), Rat(0)) != 2) {
    throw GraphError("period target components must sum to 2");
  }
  const PeriodMatrix matrix = period_matrix(tree);
  const auto orbits = vertical_orbits(tree);
  const auto mult = orbit_multiplicities(orbits);
  const int n = static_cast<int>(orbits.size());

  HPolytope section;
  section.dim = n;
  Vec normalization(mult.begin(), mult.end());
  section.equalities.push_back({std::move(normalization), Rat(1)});
  for (std::size_t s = 0; s < matrix.size(); ++s) {
    Vec row(matrix[s].begin(), matrix[s].end());
    section.equalities.push_back({std::move(row), target[s]});
  }
  for (int o = 0; o < n; ++o) {
    Vec normal(n, Rat(0));
    normal[o] = -1;
    section.inequalities.push_back({std::move(normal), Rat(0)});
  }

  const auto corners_vertices = vertices_of(section);
  if (corners_vertices.empty()) {
    throw GraphError("period target lies outside the closed image");
  }
  Vec centroid(n, Rat(0));
  for (const auto& v : corners_vertices) {
    for (int o = 0; o < n; ++o) centroid[o] += v[o];
  }
  for (int o = 0; o < n; ++o) centroid[o] /= static_cast<int>(corners_vertices.size());

  LocalFiber fiber;
  fiber.cone = width_cone(tree);
  std::vector<int> zero_orbits;
  for (int o = 0; o < n; ++o) {
    if (centroid[o] == 0) zero_orbits.push_back(o);
  }
  if (zero_orbits.empty()) {
    fiber.pieces.push_back({{}, section, affine_dim(corners_vertices)});
    return fiber;
  }

  fiber.boundary = true;
  const auto kept = kept_rows(inv.genus, inv.ovals);
  const auto corners = projected_corners(matrix, orbits, kept);
  std::vector<Vec> face_corners;
  for (int o = 0; o < n; ++o) {
    if (std::find(zero_orbits.begin(), zero_orbits.end(), o) == zero_orbits.end()) {
      face_corners.push_back(corners[o]);
    }
  }
  const int image_codim = affine_dim(corners) - affine_dim(face_corners);
  fiber.codim_match = static_cast<int>(zero_orbits.size()) == image_codim;
  fiber.outer = face_lifts_outer(tree, orbits, zero_orbits);
  if (fiber.codim_match && !fiber.outer) {
    fiber.pieces.push_back({zero_orbits, section, affine_dim(corners_vertices)});
  }
  return fiber;
}

}  // namespace wpt
