#pragma once

#include <optional>
#include <vector>

#include "wpt/rational.hpp"

namespace wpt {

// Exact rational linear algebra and small-dimension polyhedra. Everything here
// is brute-force but exact; the dimensions in this project never exceed five
// and the constraint counts stay small, so subset enumeration is fine.

using Vec = std::vector<Rat>;
using Matrix = std::vector<Vec>;

Rat dot(const Vec& a, const Vec& b);
Vec mat_vec(const Matrix& m, const Vec& x);
Matrix mat_mul(const Matrix& a, const Matrix& b);

int rank(Matrix a);

// Solution of a.x == b when it is consistent and unique, otherwise nullopt.
std::optional<Vec> solve(Matrix a, Vec b);

// Basis of {x in R^cols : a.x == 0}; a may have no rows.
std::vector<Vec> nullspace_basis(Matrix a, int cols);

int affine_dim(const std::vector<Vec>& points);

// Scale a constraint to a primitive integer vector. The inequality direction
// is preserved; pass allow_flip=true (equalities) to also force the first
// nonzero entry positive.
void normalize_constraint(Vec& normal, Rat& offset, bool allow_flip = false);

struct Hyperplane {
  Vec normal;
  Rat offset;  // normal . x == offset
};

struct HalfSpace {
  Vec normal;
  Rat offset;  // normal . x <= offset
};

struct HPolytope {
  int dim = 0;
  std::vector<Hyperplane> equalities;
  std::vector<HalfSpace> inequalities;
};

bool contains(const HPolytope& p, const Vec& x);

// Equalities tight, every inequality strict (relative interior for a
// full-dimensional face description).
bool contains_rel_interior(const HPolytope& p, const Vec& x);

// All basic feasible points (vertices), deduplicated, sorted.
std::vector<Vec> vertices_of(const HPolytope& p);

// Extreme rays of the recession cone, as primitive integer vectors, sorted.
// Meaningful when the polyhedron is pointed.
std::vector<Vec> extreme_rays_of(const HPolytope& p);

// Convex hull of a point set: affine-hull equalities plus one inequality per
// facet, normalized and deduplicated.
HPolytope hull_of(const std::vector<Vec>& points);

// Planar hull in counterclockwise order starting at the lexicographic
// minimum; collinear intermediate points are dropped.
std::vector<Vec> convex_hull_2d(std::vector<Vec> points);

}  // namespace wpt
