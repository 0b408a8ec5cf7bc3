#include "wpt/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wpt {

namespace {

using nlohmann::ordered_json;

ordered_json parse_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& ex) {
    throw GraphError(std::string("invalid JSON: ") + ex.what());
  }
}

const ordered_json& require_field(const ordered_json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw GraphError(std::string("missing '") + key + "' in " + where);
  }
  return *it;
}

int require_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer()) throw GraphError(std::string(what) + " must be an integer");
  return j.get<int>();
}

int parse_id_key(const std::string& key, const char* what) {
  if (key.empty()) throw GraphError(std::string("empty id key in ") + what);
  for (char c : key) {
    if (c < '0' || c > '9') {
      throw GraphError(std::string("bad id key '") + key + "' in " + what);
    }
  }
  try {
    return std::stoi(key);
  } catch (const std::exception&) {
    throw GraphError(std::string("bad id key '") + key + "' in " + what);
  }
}

Rat parse_rat_value(const ordered_json& j, const char* what) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const std::invalid_argument& ex) {
      throw GraphError(std::string("bad rational in ") + what + ": " + ex.what());
    }
  }
  throw GraphError(std::string(what) + " values must be rational strings");
}

std::map<int, Rat> parse_rat_map(const ordered_json& j, const char* what, int limit) {
  if (!j.is_object()) throw GraphError(std::string(what) + " must be an object");
  std::map<int, Rat> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int id = parse_id_key(it.key(), what);
    if (id >= limit) {
      throw GraphError(std::string("id ") + std::to_string(id) + " out of range in " + what);
    }
    out.emplace(id, parse_rat_value(it.value(), what));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

GraphDocument parse_graph_json(const std::string& text) {
  const ordered_json j = parse_text(text);
  if (!j.is_object()) throw GraphError("graph document must be a JSON object");

  GraphDocument doc;
  PlanarTree& t = doc.tree;

  const ordered_json& jv = require_field(j, "vertices", "graph document");
  if (!jv.is_array() || jv.empty()) {
    throw GraphError("'vertices' must be a nonempty array");
  }
  const int V = static_cast<int>(jv.size());
  for (int i = 0; i < V; ++i) {
    const ordered_json& item = jv[i];
    if (!item.is_object()) throw GraphError("vertex entries must be objects");
    if (require_int(require_field(item, "id", "vertex"), "vertex id") != i) {
      throw GraphError("vertex ids must be 0..n-1 in array order");
    }
    const std::string axis = require_field(item, "axis", "vertex").get<std::string>();
    PlanarTree::Vertex vx;
    if (axis == "real") {
      vx.axis = Axis::Real;
    } else if (axis == "upper") {
      vx.axis = Axis::Upper;
    } else if (axis == "lower") {
      vx.axis = Axis::Lower;
    } else {
      throw GraphError("unknown axis tag '" + axis + "'");
    }
    t.vertices.push_back(vx);
    if (vx.axis == Axis::Real) t.real_order.push_back(i);
  }

  const ordered_json& je = require_field(j, "edges", "graph document");
  if (!je.is_array()) throw GraphError("'edges' must be an array");
  const int E = static_cast<int>(je.size());
  for (int i = 0; i < E; ++i) {
    const ordered_json& item = je[i];
    if (!item.is_object()) throw GraphError("edge entries must be objects");
    if (require_int(require_field(item, "id", "edge"), "edge id") != i) {
      throw GraphError("edge ids must be 0..m-1 in array order");
    }
    const std::string kind = require_field(item, "kind", "edge").get<std::string>();
    const ordered_json& ends = require_field(item, "ends", "edge");
    if (!ends.is_array() || ends.size() != 2) {
      throw GraphError("edge 'ends' must be a pair");
    }
    const int a = require_int(ends[0], "edge end");
    const int b = require_int(ends[1], "edge end");
    if (a < 0 || a >= V || b < 0 || b >= V) throw GraphError("edge end out of range");
    PlanarTree::Edge ed;
    if (kind == "v") {
      ed.kind = EdgeKind::Vertical;
      if (item.contains("head")) throw GraphError("vertical edges must not have a head");
      ed.a = a;
      ed.b = b;
    } else if (kind == "h") {
      ed.kind = EdgeKind::Horizontal;
      const int head = require_int(require_field(item, "head", "horizontal edge"), "edge head");
      if (head != a && head != b) throw GraphError("edge head must be one of its ends");
      ed.a = (head == a) ? b : a;
      ed.b = head;
    } else {
      throw GraphError("unknown edge kind '" + kind + "'");
    }
    t.edges.push_back(ed);
  }

  const ordered_json& jr = require_field(j, "rotation", "graph document");
  if (!jr.is_object()) throw GraphError("'rotation' must be an object");
  t.rotation.assign(V, {});
  std::vector<char> have_rot(V, 0);
  for (auto it = jr.begin(); it != jr.end(); ++it) {
    const int v = parse_id_key(it.key(), "rotation");
    if (v >= V) throw GraphError("rotation entry for unknown vertex " + it.key());
    if (!it.value().is_array()) throw GraphError("rotation entries must be arrays");
    for (const ordered_json& e : it.value()) {
      const int id = require_int(e, "rotation edge id");
      if (id < 0 || id >= E) throw GraphError("rotation refers to unknown edge");
      t.rotation[v].push_back(id);
    }
    have_rot[v] = 1;
  }
  for (int v = 0; v < V; ++v) {
    if (!have_rot[v]) throw GraphError("missing rotation for vertex " + std::to_string(v));
  }

  const ordered_json& jm = require_field(j, "mirror", "graph document");
  const ordered_json& jmv = require_field(jm, "v", "mirror");
  const ordered_json& jme = require_field(jm, "e", "mirror");
  t.sigma_v.assign(V, -1);
  t.sigma_e.assign(E, -1);
  for (auto it = jmv.begin(); it != jmv.end(); ++it) {
    const int v = parse_id_key(it.key(), "mirror.v");
    if (v >= V) throw GraphError("mirror entry for unknown vertex " + it.key());
    const int s = require_int(it.value(), "mirror image");
    if (s < 0 || s >= V) throw GraphError("mirror image out of range");
    t.sigma_v[v] = s;
  }
  for (auto it = jme.begin(); it != jme.end(); ++it) {
    const int e = parse_id_key(it.key(), "mirror.e");
    if (e >= E) throw GraphError("mirror entry for unknown edge " + it.key());
    const int s = require_int(it.value(), "mirror image");
    if (s < 0 || s >= E) throw GraphError("mirror image out of range");
    t.sigma_e[e] = s;
  }
  for (int v = 0; v < V; ++v) {
    if (t.sigma_v[v] < 0) throw GraphError("missing mirror image for vertex " + std::to_string(v));
  }
  for (int e = 0; e < E; ++e) {
    if (t.sigma_e[e] < 0) throw GraphError("missing mirror image for edge " + std::to_string(e));
  }

  if (j.contains("H") || j.contains("W")) {
    WeightAssignment w;
    if (j.contains("H")) w.H = parse_rat_map(j["H"], "H", E);
    if (j.contains("W")) w.W = parse_rat_map(j["W"], "W", V);
    doc.weights = std::move(w);
  }
  return doc;
}

GraphDocument load_graph(const std::string& path) {
  return parse_graph_json(read_file(path));
}

std::string to_json(const PlanarTree& t, const WeightAssignment* weights) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (int v = 0; v < t.vertex_count(); ++v) {
    const char* axis = nullptr;
    switch (t.vertices[v].axis) {
      case Axis::Real:
        axis = "real";
        break;
      case Axis::Upper:
        axis = "upper";
        break;
      case Axis::Lower:
        axis = "lower";
        break;
    }
    j["vertices"].push_back({{"id", v}, {"axis", axis}});
  }
  j["edges"] = ordered_json::array();
  for (int e = 0; e < t.edge_count(); ++e) {
    const auto& ed = t.edges[e];
    ordered_json item{{"id", e},
                      {"kind", ed.kind == EdgeKind::Vertical ? "v" : "h"},
                      {"ends", {ed.a, ed.b}}};
    if (ed.kind == EdgeKind::Horizontal) item["head"] = ed.b;
    j["edges"].push_back(std::move(item));
  }
  j["rotation"] = ordered_json::object();
  for (int v = 0; v < t.vertex_count(); ++v) {
    j["rotation"][std::to_string(v)] = t.rotation[v];
  }
  j["mirror"]["v"] = ordered_json::object();
  for (int v = 0; v < t.vertex_count(); ++v) {
    j["mirror"]["v"][std::to_string(v)] = t.sigma_v[v];
  }
  j["mirror"]["e"] = ordered_json::object();
  for (int e = 0; e < t.edge_count(); ++e) {
    j["mirror"]["e"][std::to_string(e)] = t.sigma_e[e];
  }
  if (weights != nullptr) {
    j["H"] = ordered_json::object();
    for (const auto& [e, h] : weights->H) j["H"][std::to_string(e)] = format_rat(h);
    j["W"] = ordered_json::object();
    for (const auto& [v, x] : weights->W) j["W"][std::to_string(v)] = format_rat(x);
  }
  return j.dump(2) + "\n";
}

void save_graph(const std::string& path, const PlanarTree& tree, const WeightAssignment* weights) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write file: " + path);
  out << to_json(tree, weights);
}

WeightAssignment parse_weights_json(const std::string& text, const PlanarTree& tree) {
  const ordered_json j = parse_text(text);
  if (!j.is_object()) throw GraphError("weight document must be a JSON object");
  WeightAssignment w;
  if (j.contains("H")) w.H = parse_rat_map(j["H"], "H", tree.edge_count());
  if (j.contains("W")) w.W = parse_rat_map(j["W"], "W", tree.vertex_count());
  return w;
}

WeightAssignment load_weights(const std::string& path, const PlanarTree& tree) {
  return parse_weights_json(read_file(path), tree);
}

std::string weights_to_json(const WeightAssignment& weights) {
  ordered_json j;
  j["H"] = ordered_json::object();
  for (const auto& [e, h] : weights.H) j["H"][std::to_string(e)] = format_rat(h);
  j["W"] = ordered_json::object();
  for (const auto& [v, x] : weights.W) j["W"][std::to_string(v)] = format_rat(x);
  return j.dump(2) + "\n";
}

}  // namespace wpt
