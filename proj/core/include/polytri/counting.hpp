#pragma once

#include <span>
#include <vector>

#include <polytri/bigint.hpp>
#include <polytri/combinatorics.hpp>

namespace polytri {

// Convex k-gon with every side subdivided by r-1 extra points (k*r boundary
// points in total).
struct SubdivisionParams {
  int k = 0;  // corners, >= 2
  int r = 0;  // points per string counting one endpoint, >= 1
  void validate() const;
  int points() const { return k * r; }
};

// Triangle with a, b, c interior subdivision points on sides BC, CA, AB.
struct TriangleParams {
  int a = 0, b = 0, c = 0;
  void validate() const;
  int sum() const { return a + b + c; }
  int points() const { return sum() + 3; }
};

// Convex polygon with n_points boundary points of which subdivided_sides
// sides carry exactly one subdivision point each.
struct PartialParams {
  int n_points = 0;         // N >= 3
  int subdivided_sides = 0; // s, 0 <= 2s <= N
  void validate() const;
};

// ---- balanced counts: three independent evaluation routes ----

// Inclusion-exclusion over sets of pairwise non-crossing forbidden
// diagonals: sum_m (-1)^m a_coeff(k,r,m) C_{kr-m-2}.
Count balanced_count_ie(SubdivisionParams p);

// The two binomial double sums obtained by coefficient extraction from the
// contour-integral representation. Inner terms use the exact coefficients of
// (1-t)^e (signed when e >= 0) so the formulas remain valid at boundary
// indices, matching the convention under which the k=2 row degenerates to a
// central binomial coefficient.
Count balanced_count_sum1(SubdivisionParams p);
Count balanced_count_sum2(SubdivisionParams p);

// Front door used by the CLI: the (k,r)=(2,1) digon is defined as 1 by
// convention (outside the kr >= 3 hypothesis of the sum formulas).
Count balanced_count(SubdivisionParams p);

// ---- k = 3 family: five independent routes to the same number ----

Count k3_sum_formula(int r);             // the k=3 specialization of the double sum
Count k3_halfsum_formula(int r);         // -2^{3r-5} + (3/2) sum_j binom(3r-4, 2r-2-j)
Count k3_tail_formula(int r);            // 2^{3r-4} - 3 sum_{j<=r-3} binom(3r-4, j)
Count k3_triple_binomial(int r);         // sum binom(r-1,i+j) binom(r-1,j+k) binom(r-1,i+k)
Count k3_eight_power_formula(int r);     // 3 binom(3r-4,r-2) + sum (5j+1)/(2j+1) binom(3j,j) 8^{r-2-j}, r >= 2

// Verifies count(3,r+1) - 8 count(3,r) = 3 (5r^2-19r+6) (3r-4)! / ((r-2)!(2r)!)
// exactly for 2 <= r < r_max.
bool k3_recurrence_holds(int r_max);

// ---- subdivided triangle (non-balanced k=3) ----

Count triangle_d_count(TriangleParams t);        // no central triangle
Count triangle_d_corner_count(TriangleParams t); // corner-side diagonals at A only
Count triangle_t_count(TriangleParams t);        // with central triangle
Count triangle_count(TriangleParams t);          // all triangulations
Count triangle_binomial_sum(TriangleParams t);   // sum over fundamental-set types

// ---- partially subdivided polygons and indented configurations ----

Count partial_count(PartialParams p);

// Indented configuration: every string interior pulled slightly inwards;
// count = balanced count * C_{r-1}^k.
Count indented_count(SubdivisionParams p);

// Inclusion-exclusion for arbitrary per-side subdivision counts; verified
// against the enumeration oracle and the published special cases.
Count general_count(std::span<const int> sides);
Count general_count(const std::vector<int>& sides);

}  // namespace polytri
