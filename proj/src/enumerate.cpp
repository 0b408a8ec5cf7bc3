#include "wpt/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_set>

#include "wpt/build.hpp"

namespace wpt {

namespace {

// Resource usage of a decoration subtree in the upper half-plane, including
// the edge joining its root to the parent.
struct DecUsage {
  int bp = 0;       // branchpoints
  int saddles = 0;  // saddle vertices
  int verts = 0;    // vertical edges
  int nodes = 0;    // vertices
};

DecUsage operator+(const DecUsage& a, const DecUsage& b) {
  return {a.bp + b.bp, a.saddles + b.saddles, a.verts + b.verts, a.nodes + b.nodes};
}

bool fits(const DecUsage& u, const DecUsage& cap) {
  return u.bp <= cap.bp && u.saddles <= cap.saddles && u.verts <= cap.verts &&
         u.nodes <= cap.nodes;
}

DecUsage minus(const DecUsage& cap, const DecUsage& u) {
  return {cap.bp - u.bp, cap.saddles - u.saddles, cap.verts - u.verts, cap.nodes - u.nodes};
}

// End type at a node for the edge to its parent.
char parent_char(UpperNode::Link l) {
  switch (l) {
    case UpperNode::Link::Vertical:
      return 'v';
    case UpperNode::Link::OutEdge:
      return 'i';  // parent is the tail, so this end is a head
    case UpperNode::Link::InEdge:
      return 'o';
  }
  return '?';
}

// End type at a node for the edge to one of its children.
char child_char(UpperNode::Link l) {
  switch (l) {
    case UpperNode::Link::Vertical:
      return 'v';
    case UpperNode::Link::OutEdge:
      return 'o';
    case UpperNode::Link::InEdge:
      return 'i';
  }
  return '?';
}

// Local validity of a vertex given its cyclic end types: outgoing ends must be
// separated, multiplicity-zero vertices need both edge kinds, and the head of
// every horizontal edge must be a saddle (otherwise no strict weights exist).
bool local_ends_ok(const std::vector<char>& ends) {
  int dv = 0, din = 0, dout = 0;
  for (char c : ends) {
    if (c == 'v') ++dv;
    if (c == 'i') ++din;
    if (c == 'o') ++dout;
  }
  if (dv > 0 && din > 0) return false;
  if (dv + 2 * din - 2 == 0 && (dv == 0 || din + dout == 0)) return false;
  if (dout > 0) {
    const int n = static_cast<int>(ends.size());
    std::vector<int> outs;
    for (int i = 0; i < n; ++i) {
      if (ends[i] == 'o') outs.push_back(i);
    }
    const int m = static_cast<int>(outs.size());
    for (int j = 0; j < m; ++j) {
      const int gap = ((outs[(j + 1) % m] - outs[j] - 1) % n + n) % n;
      if (gap == 0) return false;
    }
  }
  return true;
}

using DecTree = std::pair<UpperNode, DecUsage>;

// Generates every decoration subtree within a resource cap. Memoized on the
// cap; caps are tiny, so the tables stay small.
class DecorationGenerator {
 public:
  std::vector<DecTree> subtrees(UpperNode::Link link, const DecUsage& cap) {
    const auto key = std::make_tuple(static_cast<int>(link), cap.bp, cap.saddles, cap.verts,
                                     cap.nodes);
    auto it = subtree_memo_.find(key);
    if (it != subtree_memo_.end()) return it->second;

    std::vector<DecTree> out;
    DecUsage self;
    self.nodes = 1;
    self.verts = link == UpperNode::Link::Vertical ? 1 : 0;
    if (self.nodes <= cap.nodes && self.verts <= cap.verts) {
      for (const auto& [children, cu] : lists(minus(cap, self))) {
        std::vector<char> ends;
        ends.push_back(parent_char(link));
        for (const UpperNode& c : children) ends.push_back(child_char(c.link));
        if (!local_ends_ok(ends)) continue;
        int dv = 0;
        for (char c : ends) dv += c == 'v';
        DecUsage usage = self + cu;
        usage.bp += dv % 2;
        usage.saddles += dv == 0;
        if (!fits(usage, cap)) continue;
        out.push_back({UpperNode{link, children}, usage});
      }
    }
    subtree_memo_.emplace(key, out);
    return out;
  }

 private:
  // Every ordered list of child subtrees within the cap. Each subtree carries
  // at least one branchpoint (its leaves are vertical), so recursion on the
  // branchpoint budget terminates.
  std::vector<std::pair<std::vector<UpperNode>, DecUsage>> lists(const DecUsage& cap) {
    const auto key = std::make_tuple(cap.bp, cap.saddles, cap.verts, cap.nodes);
    auto it = list_memo_.find(key);
    if (it != list_memo_.end()) return it->second;

    std::vector<std::pair<std::vector<UpperNode>, DecUsage>> out;
    out.push_back({{}, {}});
    for (UpperNode::Link link : {UpperNode::Link::Vertical, UpperNode::Link::OutEdge,
                                 UpperNode::Link::InEdge}) {
      for (const DecTree& first : subtrees(link, cap)) {
        for (const auto& [rest, ru] : lists(minus(cap, first.second))) {
          std::vector<UpperNode> combined;
          combined.push_back(first.first);
          combined.insert(combined.end(), rest.begin(), rest.end());
          out.push_back({std::move(combined), first.second + ru});
        }
      }
    }
    list_memo_.emplace(key, out);
    return out;
  }

  std::map<std::tuple<int, int, int, int, int>, std::vector<DecTree>> subtree_memo_;
  std::map<std::tuple<int, int, int, int>,
           std::vector<std::pair<std::vector<UpperNode>, DecUsage>>>
      list_memo_;
};

class Search {
 public:
  Search(const EnumerateOptions& opt)
      : g_(opt.genus),
        k_(opt.ovals),
        all_dims_(opt.all_dims),
        stable_only_(opt.stable_only),
        full_budget_(12 * (opt.genus + 1)),
        upper_bp_target_(opt.genus + 1 - opt.ovals),
        real_bp_target_(2 * opt.ovals),
        max_vert_orbits_(2 * opt.genus + 1),
        max_saddle_orbits_(2 * opt.genus) {
    DecUsage cap;
    cap.bp = upper_bp_target_;
    cap.saddles = max_saddle_orbits_;
    cap.verts = max_vert_orbits_;
    cap.nodes = (full_budget_ - 1) / 2;
    DecorationGenerator gen;
    for (UpperNode::Link link : {UpperNode::Link::Vertical, UpperNode::Link::OutEdge,
                                 UpperNode::Link::InEdge}) {
      for (const DecTree& t : gen.subtrees(link, cap)) pool_.push_back(t);
    }
  }

  std::vector<EnumeratedGraph> run() {
    vertex_step(std::nullopt);
    std::sort(results_.begin(), results_.end(),
              [](const EnumeratedGraph& a, const EnumeratedGraph& b) { return a.key < b.key; });
    return std::move(results_);
  }

 private:
  static bool is_vert(const std::optional<AxisLink>& l) {
    return l.has_value() && *l == AxisLink::VerticalEdge;
  }

  // End type characters at the current vertex for its left/right axis link.
  static char left_char(AxisLink l) {
    switch (l) {
      case AxisLink::VerticalEdge:
        return 'v';
      case AxisLink::RightwardEdge:
        return 'i';
      case AxisLink::LeftwardEdge:
        return 'o';
    }
    return '?';
  }
  static char right_char(AxisLink l) {
    switch (l) {
      case AxisLink::VerticalEdge:
        return 'v';
      case AxisLink::RightwardEdge:
        return 'o';
      case AxisLink::LeftwardEdge:
        return 'i';
    }
    return '?';
  }

  bool vertex_ok(const std::optional<AxisLink>& left, const std::vector<UpperNode>& decos,
                 const std::optional<AxisLink>& right) const {
    std::vector<char> ends;
    if (right) ends.push_back(right_char(*right));
    for (const UpperNode& d : decos) ends.push_back(child_char(d.link));
    if (left) ends.push_back(left_char(*left));
    for (auto it = decos.rbegin(); it != decos.rend(); ++it) {
      ends.push_back(child_char(it->link));
    }
    return local_ends_ok(ends);
  }

  // Start a new on-axis vertex whose link to the previous vertex is `left`,
  // then recursively choose its decoration list.
  void vertex_step(std::optional<AxisLink> left) {
    std::vector<UpperNode> decos;
    deco_rec(left, decos, DecUsage{});
  }

  void deco_rec(const std::optional<AxisLink>& left, std::vector<UpperNode>& decos,
                const DecUsage& du) {
    finalize_vertex(left, decos, du);
    for (const auto& [node, usage] : pool_) {
      const DecUsage total = du + usage;
      if (used_upper_bp_ + total.bp > upper_bp_target_) continue;
      if (used_saddle_orbits_ + total.saddles > max_saddle_orbits_) continue;
      if (used_vert_orbits_ + total.verts > max_vert_orbits_) continue;
      if (used_full_vertices_ + 1 + 2 * total.nodes > full_budget_) continue;
      decos.push_back(node);
      deco_rec(left, decos, total);
      decos.pop_back();
    }
  }

  // The decoration list of the current vertex is fixed; account for it, then
  // either end the axis here or extend it by each possible link.
  void finalize_vertex(const std::optional<AxisLink>& left, const std::vector<UpperNode>& decos,
                       const DecUsage& du) {
    if (used_full_vertices_ + 1 + 2 * du.nodes > full_budget_) return;
    used_upper_bp_ += du.bp;
    used_saddle_orbits_ += du.saddles;
    used_vert_orbits_ += du.verts;
    used_full_vertices_ += 1 + 2 * du.nodes;
    script_.axis.push_back({decos});

    const int vert_decos =
        static_cast<int>(std::count_if(decos.begin(), decos.end(), [](const UpperNode& d) {
          return d.link == UpperNode::Link::Vertical;
        }));

    for (int choice = 0; choice < 4; ++choice) {
      std::optional<AxisLink> right;
      if (choice > 0) right = static_cast<AxisLink>(choice - 1);
      const int dv_axis = (is_vert(left) ? 1 : 0) + (is_vert(right) ? 1 : 0);
      const int dv_total = dv_axis + 2 * vert_decos;
      const bool is_bp = dv_total % 2 == 1;
      const bool is_saddle = dv_total == 0;
      if (is_bp && used_real_bp_ + 1 > real_bp_target_) continue;
      if (is_saddle && used_saddle_orbits_ + 1 > max_saddle_orbits_) continue;
      if (is_vert(right) && used_vert_orbits_ + 1 > max_vert_orbits_) continue;
      if (!vertex_ok(left, decos, right)) continue;

      used_real_bp_ += is_bp ? 1 : 0;
      used_saddle_orbits_ += is_saddle ? 1 : 0;
      if (!right) {
        try_complete();
      } else {
        used_vert_orbits_ += is_vert(right) ? 1 : 0;
        script_.links.push_back(*right);
        vertex_step(right);
        script_.links.pop_back();
        used_vert_orbits_ -= is_vert(right) ? 1 : 0;
      }
      used_real_bp_ -= is_bp ? 1 : 0;
      used_saddle_orbits_ -= is_saddle ? 1 : 0;
    }

    script_.axis.pop_back();
    used_upper_bp_ -= du.bp;
    used_saddle_orbits_ -= du.saddles;
    used_vert_orbits_ -= du.verts;
    used_full_vertices_ -= 1 + 2 * du.nodes;
  }

  void try_complete() {
    if (used_real_bp_ != real_bp_target_) return;
    if (used_upper_bp_ != upper_bp_target_) return;
    if (used_vert_orbits_ < 1) return;
    const int dim = used_vert_orbits_ - 1 + used_saddle_orbits_;
    if (dim > 2 * g_) return;
    if (!all_dims_ && !stable_only_ && dim != 2 * g_) return;

    const AssembledTree assembled = assemble(script_);
    const PlanarTree& tree = assembled.tree;
    if (!validate_topology(tree).pass()) return;
    GraphInvariants inv;
    try {
      inv = invariants(tree);
    } catch (const GraphError&) {
      return;
    }
    if (inv.genus != g_ || inv.ovals != k_) return;
    if (stable_only_) {
      for (int v = 0; v < tree.vertex_count(); ++v) {
        if (!classify_stable_vertex(tree, v)) return;
      }
    }

    std::string key = canonical_form(tree);
    if (!seen_.insert(key).second) return;
    results_.push_back({tree, dim, std::move(key)});
  }

  const int g_, k_;
  const bool all_dims_, stable_only_;
  const int full_budget_, upper_bp_target_, real_bp_target_;
  const int max_vert_orbits_, max_saddle_orbits_;

  std::vector<DecTree> pool_;
  AxisScript script_;
  int used_upper_bp_ = 0;
  int used_saddle_orbits_ = 0;
  int used_vert_orbits_ = 0;
  int used_real_bp_ = 0;
  int used_full_vertices_ = 0;
  std::unordered_set<std::string> seen_;
  std::vector<EnumeratedGraph> results_;
};

std::vector<char> vertex_ends(const PlanarTree& t, int v) {
  std::vector<char> ends;
  for (int e : t.rotation[v]) {
    const auto& ed = t.edges[e];
    if (ed.kind == EdgeKind::Vertical) {
      ends.push_back('v');
    } else {
      ends.push_back(ed.a == v ? 'o' : 'i');
    }
  }
  return ends;
}

}  // namespace

std::vector<EnumeratedGraph> enumerate_graphs(const EnumerateOptions& opt) {
  if (opt.genus < 1 || opt.ovals < 1 || opt.ovals > opt.genus + 1) {
    throw GraphError("enumeration requires genus >= 1 and 1 <= ovals <= genus + 1");
  }
  Search search(opt);
  return search.run();
}

std::string vertex_shape(const PlanarTree& tree, int v) {
  const std::vector<char> ends = vertex_ends(tree, v);
  const int n = static_cast<int>(ends.size());
  std::string best;
  for (int s = 0; s < std::max(n, 1); ++s) {
    std::string rot;
    for (int i = 0; i < n; ++i) rot.push_back(ends[(s + i) % n]);
    if (best.empty() || rot < best) best = rot;
  }
  char tag = tree.is_real(v) ? 'R' : (tree.is_upper(v) ? 'U' : 'L');
  return std::string(1, tag) + ":" + best;
}

std::optional<StableVertexKind> classify_stable_vertex(const PlanarTree& tree, int v) {
  using K = StableVertexKind;
  if (!tree.is_real(v)) {
    int dv = 0, din = 0, dout = 0;
    for (char c : vertex_ends(tree, v)) {
      if (c == 'v') ++dv;
      if (c == 'i') ++din;
      if (c == 'o') ++dout;
    }
    if (dv == 1 && din == 0 && dout == 0) return K::HangingVertical;
    if (dv == 2 && din == 0 && dout == 1) return K::VerticalWithOutgoing;
    if (dv == 0 && din == 2 && dout == 0) return K::TwoIncoming;
    return std::nullopt;
  }

  // Axis vertex: split end counts by where the edge leads (axis / upper /
  // lower half). The rotation-pattern validation already pins the cyclic
  // arrangement, so count tuples identify the shape.
  int av = 0, ao = 0, ai = 0;  // ends on the axis
  int uv = 0, uo = 0, ui = 0;  // ends into the upper half
  int lv = 0, lo = 0, li = 0;  // ends into the lower half
  for (int e : tree.rotation[v]) {
    const auto& ed = tree.edges[e];
    const int w = tree.other_end(e, v);
    const char c = ed.kind == EdgeKind::Vertical ? 'v' : (ed.a == v ? 'o' : 'i');
    int& n = tree.is_real(w) ? (c == 'v' ? av : c == 'o' ? ao : ai)
             : tree.is_upper(w) ? (c == 'v' ? uv : c == 'o' ? uo : ui)
                                : (c == 'v' ? lv : c == 'o' ? lo : li);
    ++n;
  }
  if (uv != lv || uo != lo || ui != li) return std::nullopt;  // not mirror-symmetric

  const std::array<int, 6> t = {av, ao, ai, uv, uo, ui};
  if (t == std::array<int, 6>{1, 0, 0, 0, 0, 0}) return K::HangingVertical;
  if (t == std::array<int, 6>{0, 1, 0, 1, 0, 0}) return K::VerticalWithOutgoing;
  if (t == std::array<int, 6>{0, 0, 2, 0, 0, 0}) return K::TwoIncoming;
  if (t == std::array<int, 6>{0, 0, 0, 0, 0, 1}) return K::TwoIncoming;
  if (t == std::array<int, 6>{2, 0, 0, 1, 0, 0}) return K::AxisCross;
  if (t == std::array<int, 6>{1, 1, 0, 0, 0, 0}) return K::AxisBranchWithOut;
  if (t == std::array<int, 6>{2, 0, 0, 0, 1, 0}) return K::AxisChainWithOutPair;
  if (t == std::array<int, 6>{0, 2, 0, 1, 0, 0}) return K::AxisStubsWithOutPair;
  if (t == std::array<int, 6>{0, 2, 0, 0, 0, 1}) return K::AxisSaddleWithOutPair;
  if (t == std::array<int, 6>{0, 1, 0, 0, 0, 1}) return K::AxisSaddleWithOut;
  return std::nullopt;
}

}  // namespace wpt
