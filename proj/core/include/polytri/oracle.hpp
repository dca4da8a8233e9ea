#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include <polytri/bigint.hpp>
#include <polytri/counting.hpp>

namespace polytri {

// Labeled convex configuration: boundary points 0..n-1 in convex position,
// partitioned into strings. String i runs from corner i through interior[i]
// interior points to corner i+1 (corners belong to both incident strings).
// Convexity makes crossing a pure index predicate, so no coordinates appear
// anywhere in the oracle.
class StringLayout {
 public:
  explicit StringLayout(std::vector<int> interior_per_side);

  static StringLayout balanced(SubdivisionParams p);
  // Triangle Delta(a,b,c): corner 0 = A, 1 = B, 2 = C, sides AB=c, BC=a, CA=b.
  static StringLayout triangle(TriangleParams t);
  // Partially subdivided polygon; canonical layout puts the s subdivided
  // sides first, spread=true interleaves them for placement-independence tests.
  static StringLayout partial(PartialParams p, bool spread = false);

  int n() const { return n_; }
  int side_count() const { return static_cast<int>(interior_.size()); }
  int interior_count(int side) const { return interior_[static_cast<size_t>(side)]; }

  // Absolute position of P_{side,idx}; idx ranges over [0, interior[side]+1],
  // where idx 0 is corner `side` and the top index is corner side+1.
  int point(int side, int idx) const;
  int corner(int i) const { return corner_[static_cast<size_t>(i % side_count())]; }
  bool is_corner(int p) const;
  // Side owning an interior point, -1 for corners.
  int interior_side(int p) const;

  bool same_string(int p, int q) const;
  // Forbidden pair at boundary distance 2 (the pruning predicate).
  bool essentially_forbidden(int p, int q) const;

 private:
  std::vector<int> interior_;
  std::vector<int> corner_;
  std::vector<int> owner_;  // interior -> side, corners -> -1
  int n_ = 0;
};

// Triangulation of the convex position set {0..n-1}: exactly n-3 pairwise
// non-crossing diagonals (normalized p < q, sorted).
struct Triangulation {
  int n = 0;
  std::vector<std::pair<int, int>> diagonals;

  bool contains(int p, int q) const;
  void normalize();
  bool operator==(const Triangulation&) const = default;
  bool operator<(const Triangulation& o) const {
    return diagonals < o.diagonals;
  }
};

using TriangulationVisitor = std::function<void(const Triangulation&)>;

// Streams every triangulation of the convex n-gon exactly once, ordered by
// recursive ear decomposition rooted at the edge (0, n-1).
void enumerate_convex(int n, const TriangulationVisitor& visit);

// Streams the legal triangulations of the layout (no forbidden diagonal);
// pruning is by the distance-2 test during recursion, and every emitted
// triangulation is additionally checked to contain no longer same-string
// diagonal.
void enumerate_legal(const StringLayout& layout, const TriangulationVisitor& visit);

// Three independent counting routes over the same layout.
Count count_legal(const StringLayout& layout);       // pruned leaf enumeration
Count count_legal_dp(const StringLayout& layout);    // interval dynamic program
Count count_legal_slow(const StringLayout& layout);  // post-filtered full enumeration

enum class TriClass { T, D_A, D_B, D_C };

struct TriClassification {
  TriClass cls;
  int ear_count = 0;
  bool has_central_triangle = false;
};

// Ears, central triangle and corner-side diagonals of a legal triangulation
// of Delta(a,b,c); enforces the two-ears/three-ears dichotomy.
TriClassification classify(const Triangulation& t, TriangleParams params);

// Pairwise disjoint, non-crossing diagonals joining interior points of two
// different sides of Delta(a,b,c). type[i] counts the elements separating
// corner i.
struct FundamentalSet {
  std::vector<std::pair<int, int>> diagonals;  // absolute positions, sorted
  std::array<int, 3> type{0, 0, 0};

  bool operator==(const FundamentalSet&) const = default;
  bool operator<(const FundamentalSet& o) const { return diagonals < o.diagonals; }
};

using FundamentalSetVisitor = std::function<void(const FundamentalSet&)>;

void enumerate_fundamental_sets(TriangleParams t, const FundamentalSetVisitor& visit);

// The forward direction of the triangulation <-> fundamental set bijection.
FundamentalSet fundamental_set_of(const Triangulation& t, TriangleParams params);

// The inverse: shift to the modified set, add missing ear diagonals, apply
// the two- and three-element block rules, complete fans. Verifies that the
// result maps back to the input.
Triangulation triangulation_of(const FundamentalSet& f, TriangleParams params);

}  // namespace polytri
