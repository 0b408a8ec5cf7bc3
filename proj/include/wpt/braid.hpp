#pragma once

#include <vector>

#include "wpt/periods.hpp"
#include "wpt/polytope.hpp"

namespace wpt {

// A braid on n strands as a sequence of Artin generator letters: entry +i is
// the i-th generator, entry -i its inverse, with 1 <= i <= n-1. The empty
// word is the identity braid.
using BraidWord = std::vector<int>;

// Integer matrix acting on the g+1 cycle/period coordinates of a genus-g
// curve. Row-major, size (g+1) x (g+1).
using BurauMatrix = std::vector<std::vector<long long>>;

BurauMatrix burau_identity(int size);
BurauMatrix burau_mul(const BurauMatrix& a, const BurauMatrix& b);

// Exact determinant of an integer matrix (always +-1 for braid matrices).
long long burau_det(const BurauMatrix& m);

// Matrix of a single generator of the braid group on n = g-k+1 strands
// acting on period coordinates; negative index gives the inverse matrix.
// Generator i touches only the coordinates k+i-1 and k+i, where it acts by
// (u, v) -> (-v, u + 2v); every column of the result sums to one, so the sum
// of period coordinates is preserved.
BurauMatrix burau_generator(int index, int n, int g, int k);

// Product of the generator matrices of the word, rightmost letter acting
// first; inverse letters contribute the (integer) inverse matrix.
BurauMatrix burau(const BraidWord& word, int n, int g, int k);

// Matrix action on a period vector.
PeriodVector apply(const BurauMatrix& m, const PeriodVector& periods);

// Convenience: act by a word of Br_{g-k+1} with g read off the vector size.
PeriodVector apply(const BraidWord& word, const PeriodVector& periods, int k);

struct OrbitPoint {
  BraidWord word;      // braid applied to the target
  PeriodVector image;  // word acting on the target
  // The image satisfies some region inequality with equality (boundary
  // relative to the region's equality constraints).
  bool on_boundary = false;
};

struct OrbitResult {
  // Images of the target inside the closed region, deduplicated by image and
  // in deterministic order (two-strand scans are ordered along the chain).
  std::vector<OrbitPoint> points;
  // Images that fell on the region boundary inside one of the caller's
  // exterior-face polytopes. They are reported here instead of being merged
  // or silently dropped; the caller decides their fate.
  std::vector<OrbitPoint> sieved;
  // True when the enumeration is provably complete (always for n <= 2).
  bool exhaustive = true;
  // Word-length bound in effect for the breadth-first search, 0 when the
  // answer did not need one.
  int word_cap = 0;
  // True when no word of maximal explored length had its image inside the
  // region; a heuristic sign that every chain left the region before the
  // cap. Meaningful only when exhaustive is false.
  bool frontier_exited = true;
};

// All braid images of `target` inside the closed `region` (dimension g+1,
// equalities allowed). For n <= 1 only the identity exists; for n = 2 the
// braid group is infinite cyclic and acts by a translation, so the orbit
// meets the convex region in a contiguous chain that is enumerated exactly
// (a region unbounded along the translation direction raises GraphError).
// For n > 2 the search is breadth-first over words of at most `word_cap`
// letters, deduplicated by matrix, and the result records that it is a
// bounded heuristic. Images lying on the region boundary inside one of
// `exterior_images` are sieved into their own list.
OrbitResult orbit_in_region(const PeriodVector& target, const HPolytope& region,
                            int n,
                            const std::vector<HPolytope>& exterior_images = {},
                            int word_cap = 10);

}  // namespace wpt
