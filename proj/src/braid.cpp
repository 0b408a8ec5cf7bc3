#include "wpt/braid.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "wpt/graph.hpp"

namespace wpt {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw GraphError("braid: " + message);
}

Int rat_floor(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);  // canonical, positive
  Int q = num / den;               // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

// Routes candidate images into the kept or the sieved list of the result.
struct Collector {
  const HPolytope& region;
  const std::vector<HPolytope>& exterior;
  OrbitResult& out;

  // Returns true when the image lies in the closed region.
  bool offer(BraidWord word, PeriodVector image) {
    if (!contains(region, image)) return false;
    OrbitPoint point;
    point.word = std::move(word);
    point.image = std::move(image);
    point.on_boundary = !contains_rel_interior(region, point.image);
    bool sieve = false;
    if (point.on_boundary) {
      for (const auto& face : exterior) {
        if (contains(face, point.image)) {
          sieve = true;
          break;
        }
      }
    }
    (sieve ? out.sieved : out.points).push_back(std::move(point));
    return true;
  }
};

}  // namespace

BurauMatrix burau_identity(int size) {
  require(size >= 1, "matrix size must be positive");
  BurauMatrix m(size, std::vector<long long>(size, 0));
  for (int i = 0; i < size; ++i) m[i][i] = 1;
  return m;
}

BurauMatrix burau_mul(const BurauMatrix& a, const BurauMatrix& b) {
  const int size = static_cast<int>(a.size());
  require(size >= 1 && static_cast<int>(b.size()) == size,
          "size mismatch in matrix product");
  BurauMatrix out(size, std::vector<long long>(size, 0));
  for (int i = 0; i < size; ++i) {
    require(static_cast<int>(a[i].size()) == size &&
                static_cast<int>(b[i].size()) == size,
            "ragged matrix");
    for (int l = 0; l < size; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < size; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

long long burau_det(const BurauMatrix& m) {
  const int size = static_cast<int>(m.size());
  require(size >= 1, "determinant of an empty matrix");
  Matrix a(size, Vec(size));
  for (int i = 0; i < size; ++i) {
    require(static_cast<int>(m[i].size()) == size, "ragged matrix");
    for (int j = 0; j < size; ++j) a[i][j] = Rat(m[i][j]);
  }
  Rat det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int row = col; row < size; ++row) {
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot == -1) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int row = col + 1; row < size; ++row) {
      if (a[row][col] == 0) continue;
      const Rat factor = a[row][col] / a[col][col];
      for (int j = col; j < size; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  return numerator(det).convert_to<long long>();
}

BurauMatrix burau_generator(int index, int n, int g, int k) {
  require(g >= 1 && k >= 1, "invalid genus or oval count");
  require(n == g - k + 1, "strand count must equal g-k+1");
  const int i = index >= 0 ? index : -index;
  require(i >= 1 && i <= n - 1, "generator index out of range");
  BurauMatrix m = burau_identity(g + 1);
  const int u = k + i - 1;  // first of the two coordinates the generator moves
  if (index > 0) {
    m[u][u] = 0;
    m[u][u + 1] = -1;
    m[u + 1][u] = 1;
    m[u + 1][u + 1] = 2;
  } else {
    m[u][u] = 2;
    m[u][u + 1] = 1;
    m[u + 1][u] = -1;
    m[u + 1][u + 1] = 0;
  }
  return m;
}

BurauMatrix burau(const BraidWord& word, int n, int g, int k) {
  require(g >= 1 && k >= 1, "invalid genus or oval count");
  require(n == g - k + 1, "strand count must equal g-k+1");
  BurauMatrix m = burau_identity(g + 1);
  for (const int letter : word) m = burau_mul(m, burau_generator(letter, n, g, k));
  return m;
}

PeriodVector apply(const BurauMatrix& m, const PeriodVector& periods) {
  const int size = static_cast<int>(m.size());
  require(static_cast<int>(periods.size()) == size,
          "period vector does not match the matrix size");
  PeriodVector out(size, Rat(0));
  for (int i = 0; i < size; ++i) {
    require(static_cast<int>(m[i].size()) == size, "ragged matrix");
    for (int j = 0; j < size; ++j) {
      if (m[i][j] != 0) out[i] += Rat(m[i][j]) * periods[j];
    }
  }
  return out;
}

PeriodVector apply(const BraidWord& word, const PeriodVector& periods, int k) {
  const int g = static_cast<int>(periods.size()) - 1;
  return wpt::apply(burau(word, g - k + 1, g, k), periods);
}

OrbitResult orbit_in_region(const PeriodVector& target, const HPolytope& region,
                            int n, const std::vector<HPolytope>& exterior_images,
                            int word_cap) {
  const int size = static_cast<int>(target.size());
  require(size >= 2, "target must have at least two components");
  require(region.dim == size, "region dimension does not match the target");
  const int g = size - 1;
  require(n >= 0 && n <= g, "strand count must lie between 0 and the genus");

  OrbitResult out;
  Collector collect{region, exterior_images, out};

  if (n <= 1) {  // the braid group is trivial
    collect.offer({}, target);
    return out;
  }

  if (n == 2) {
    // The group is infinite cyclic; the m-th power of the generator maps the
    // moved pair (u, v) to (u - m t, v + m t) with the invariant t = u + v,
    // so membership in the convex region is an exact rational interval in m.
    const int k = g - n + 1;
    const Rat t = target[k] + target[k + 1];
    if (t == 0) {  // the generator fixes the target
      collect.offer({}, target);
      return out;
    }
    Vec dir(size, Rat(0));
    dir[k] = -t;
    dir[k + 1] = t;
    bool empty = false;
    std::optional<Rat> lo, hi;
    const auto restrict_le = [&](const Rat& slope, const Rat& margin) {
      // Constraint slope * m <= margin.
      if (slope == 0) {
        if (margin < 0) empty = true;
        return;
      }
      const Rat bound = margin / slope;
      if (slope > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    };
    for (const auto& eq : region.equalities) {
      const Rat slope = dot(eq.normal, dir);
      const Rat margin = eq.offset - dot(eq.normal, target);
      restrict_le(slope, margin);
      restrict_le(-slope, -margin);
    }
    for (const auto& ineq : region.inequalities)
      restrict_le(dot(ineq.normal, dir), ineq.offset - dot(ineq.normal, target));
    if (empty) return out;
    require(static_cast<bool>(lo) && static_cast<bool>(hi),
            "infinitely many braid images lie in the region (it is unbounded "
            "along the translation direction)");
    if (*hi < *lo) return out;
    const Int first = rat_ceil(*lo);
    const Int last = rat_floor(*hi);
    require(last - first <= 100000, "braid chain exceeds the enumeration bound");
    for (Int mi = first; mi <= last; ++mi) {
      const long long m = mi.convert_to<long long>();
      PeriodVector image = target;
      image[k] = target[k] - Rat(m) * t;
      image[k + 1] = target[k + 1] + Rat(m) * t;
      BraidWord word(static_cast<std::size_t>(m >= 0 ? m : -m), m >= 0 ? 1 : -1);
      collect.offer(std::move(word), std::move(image));
    }
    return out;
  }

  // n > 2: breadth-first enumeration of the group up to the word cap,
  // deduplicated by matrix; a bounded heuristic rather than a completeness
  // guarantee, and reported as such.
  require(word_cap >= 0, "negative word cap");
  const int k = g - n + 1;
  out.exhaustive = false;
  out.word_cap = word_cap;
  std::vector<BurauMatrix> gens;
  std::vector<int> letters;
  for (int i = 1; i <= n - 1; ++i) {
    for (const int sign : {1, -1}) {
      gens.push_back(burau_generator(sign * i, n, g, k));
      letters.push_back(sign * i);
    }
  }
  std::set<BurauMatrix> visited;
  std::set<PeriodVector> seen_images;
  std::vector<std::pair<BurauMatrix, BraidWord>> frontier;
  frontier.push_back({burau_identity(size), {}});
  visited.insert(frontier.front().first);
  const auto offer_state = [&](const BurauMatrix& mat, const BraidWord& word) {
    PeriodVector image = wpt::apply(mat, target);
    if (!contains(region, image)) return false;
    if (seen_images.insert(image).second) collect.offer(word, std::move(image));
    return true;
  };
  bool cap_hit_inside = false;
  offer_state(frontier.front().first, {});
  for (int depth = 1; depth <= word_cap && !frontier.empty(); ++depth) {
    std::vector<std::pair<BurauMatrix, BraidWord>> next;
    for (const auto& [mat, word] : frontier) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        BurauMatrix prod = burau_mul(mat, gens[gi]);
        if (!visited.insert(prod).second) continue;
        require(static_cast<int>(visited.size()) <= 200000,
                "word search exceeded the state bound");
        BraidWord extended = word;
        extended.push_back(letters[gi]);
        if (offer_state(prod, extended) && depth == word_cap)
          cap_hit_inside = true;
        next.push_back({std::move(prod), std::move(extended)});
      }
    }
    frontier = std::move(next);
  }
  if (frontier.empty()) {  // the whole group was enumerated after all
    out.exhaustive = true;
    out.word_cap = 0;
  }
  out.frontier_exited = !cap_hit_inside;
  return out;
}

}  // namespace wpt
