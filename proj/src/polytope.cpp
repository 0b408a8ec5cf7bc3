#include "wpt/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wpt {

namespace {

// Reduced row echelon form in place; returns the pivot column per pivot row.
std::vector<int> rref(Matrix& a) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return pivots;
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    const Rat lead = a[r][c];
    for (Rat& x : a[r]) x /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename F>
void for_each_combination(int n, int k, F&& body) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    body(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec mat_vec(const Matrix& m, const Vec& x) {
  Vec r;
  r.reserve(m.size());
  for (const Vec& row : m) r.push_back(dot(row, x));
  return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int m = static_cast<int>(b[0].size());
  Matrix r(n, Vec(m, Rat(0)));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != k) throw std::invalid_argument("mat_mul: size mismatch");
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  }
  return r;
}

int rank(Matrix a) { return static_cast<int>(rref(a).size()); }

std::optional<Vec> solve(Matrix a, Vec b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  if (a.empty()) return std::nullopt;
  const int n = static_cast<int>(a[0].size());
  Matrix aug = std::move(a);
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const std::vector<int> pivots = rref(aug);
  for (int c : pivots) {
    if (c == n) return std::nullopt;  // inconsistent
  }
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;  // underdetermined
  Vec x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][n];
  return x;
}

std::vector<Vec> nullspace_basis(Matrix a, int cols) {
  for (const Vec& row : a) {
    if (static_cast<int>(row.size()) != cols) {
      throw std::invalid_argument("nullspace_basis: size mismatch");
    }
  }
  const std::vector<int> pivots = rref(a);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols, Rat(0));
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

int affine_dim(const std::vector<Vec>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return rank(std::move(diffs));
}

void normalize_constraint(Vec& normal, Rat& offset, bool allow_flip) {
  Int lcm = 1;
  auto fold_den = [&](const Rat& x) {
    const Int d = denominator(x);
    lcm = lcm / gcd(lcm, d) * d;
  };
  for (const Rat& x : normal) fold_den(x);
  fold_den(offset);
  Int g = 0;
  auto fold_num = [&](const Rat& x) {
    const Rat scaled = x * Rat(lcm);
    Int n = numerator(scaled);
    if (n < 0) n = -n;
    g = gcd(g, n);
  };
  for (const Rat& x : normal) fold_num(x);
  fold_num(offset);
  if (g == 0) return;  // zero constraint
  const Rat scale = Rat(lcm) / Rat(g);
  for (Rat& x : normal) x *= scale;
  offset *= scale;
  if (allow_flip) {
    for (const Rat& x : normal) {
      if (x == 0) continue;
      if (x < 0) {
        for (Rat& y : normal) y = -y;
        offset = -offset;
      }
      break;
    }
  }
}

bool contains(const HPolytope& p, const Vec& x) {
  for (const Hyperplane& h : p.equalities) {
    if (dot(h.normal, x) != h.offset) return false;
  }
  for (const HalfSpace& h : p.inequalities) {
    if (dot(h.normal, x) > h.offset) return false;
  }
  return true;
}

bool contains_rel_interior(const HPolytope& p, const Vec& x) {
  for (const Hyperplane& h : p.equalities) {
    if (dot(h.normal, x) != h.offset) return false;
  }
  for (const HalfSpace& h : p.inequalities) {
    if (dot(h.normal, x) >= h.offset) return false;
  }
  return true;
}

std::vector<Vec> vertices_of(const HPolytope& p) {
  Matrix eq_rows;
  Vec eq_rhs;
  for (const Hyperplane& h : p.equalities) {
    eq_rows.push_back(h.normal);
    eq_rhs.push_back(h.offset);
  }
  const int re = rank(eq_rows);
  const int t = p.dim - re;
  const int m = static_cast<int>(p.inequalities.size());
  std::vector<Vec> out;
  if (t < 0) return out;
  for_each_combination(m, t, [&](const std::vector<int>& idx) {
    Matrix a = eq_rows;
    Vec b = eq_rhs;
    for (int i : idx) {
      a.push_back(p.inequalities[i].normal);
      b.push_back(p.inequalities[i].offset);
    }
    if (a.empty()) return;
    const auto x = solve(std::move(a), std::move(b));
    if (x && contains(p, *x)) out.push_back(*x);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vec> extreme_rays_of(const HPolytope& p) {
  Matrix eq_rows;
  for (const Hyperplane& h : p.equalities) eq_rows.push_back(h.normal);
  const int re = rank(eq_rows);
  const int t = p.dim - 1 - re;
  const int m = static_cast<int>(p.inequalities.size());
  std::vector<Vec> out;
  if (t < 0) return out;
  for_each_combination(m, t, [&](const std::vector<int>& idx) {
    Matrix a = eq_rows;
    for (int i : idx) a.push_back(p.inequalities[i].normal);
    auto ns = nullspace_basis(std::move(a), p.dim);
    if (ns.size() != 1) return;
    Vec y = std::move(ns[0]);
    auto feasible = [&](const Vec& dir) {
      for (const HalfSpace& h : p.inequalities) {
        if (dot(h.normal, dir) > 0) return false;
      }
      return true;
    };
    Vec neg(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) neg[i] = -y[i];
    const bool fw = feasible(y);
    const bool bw = feasible(neg);
    if (fw == bw) return;  // lineality direction or infeasible
    Vec ray = fw ? std::move(y) : std::move(neg);
    Rat dummy = 0;
    normalize_constraint(ray, dummy);
    out.push_back(std::move(ray));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HPolytope hull_of(const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("hull of empty point set");
  const int n = static_cast<int>(points[0].size());
  HPolytope out;
  out.dim = n;

  Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  const std::vector<Vec> hull_normals = nullspace_basis(diffs, n);
  for (const Vec& a : hull_normals) {
    Vec normal = a;
    Rat offset = dot(a, points[0]);
    normalize_constraint(normal, offset, /*allow_flip=*/true);
    out.equalities.push_back({std::move(normal), std::move(offset)});
  }
  const int adim = n - static_cast<int>(hull_normals.size());
  if (adim == 0) return out;

  std::set<std::pair<Vec, Rat>> seen;
  const int np = static_cast<int>(points.size());
  for_each_combination(np, adim, [&](const std::vector<int>& idx) {
    Matrix rows;
    for (std::size_t i = 1; i < idx.size(); ++i) {
      rows.push_back(sub(points[idx[i]], points[idx[0]]));
    }
    for (const Vec& a : hull_normals) rows.push_back(a);
    auto ns = nullspace_basis(std::move(rows), n);
    if (ns.size() != 1) return;
    Vec a = std::move(ns[0]);
    Rat b = dot(a, points[idx[0]]);
    bool le = true, ge = true;
    for (const Vec& pt : points) {
      const Rat v = dot(a, pt);
      if (v > b) le = false;
      if (v < b) ge = false;
    }
    if (le == ge) return;  // all points on the hyperplane, or neither side
    if (!le) {
      for (Rat& x : a) x = -x;
      b = -b;
    }
    normalize_constraint(a, b);
    if (seen.insert({a, b}).second) out.inequalities.push_back({std::move(a), std::move(b)});
  });
  return out;
}

std::vector<Vec> convex_hull_2d(std::vector<Vec> points) {
  for (const Vec& p : points) {
    if (p.size() != 2) throw std::invalid_argument("convex_hull_2d: points must be planar");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const int n = static_cast<int>(points.size());
  if (n <= 2) return points;
  auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vec> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  const int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace wpt
