#pragma once

#include <complex>
#include <vector>

#include <polytri/bigint.hpp>
#include <polytri/counting.hpp>
#include <polytri/poly.hpp>
#include <polytri/roots.hpp>
#include <polytri/series.hpp>

namespace polytri {

// ((1-t)^{r+1} - t^{r+1}) / (1-2t): an exact integer polynomial of degree r.
IntPoly string_quotient_poly(int r);

// P_r(x;t) = t^r (1-t)^r - x * string_quotient_poly(r), as a complex
// polynomial in t for fixed x. Invariant under t -> 1-t.
CPoly p_poly(int r, Complex x);

// Q_{j,k}(x;t) = t^{k-j} (1-t)^j - x.
CPoly q_poly(int j, int k, Complex x);

struct RootFamily {
  enum class Kind { vertical_p, horizontal_q };
  Kind kind;
  int r = 0;       // vertical parameter
  int j = 0, k = 0;  // horizontal parameters
  Complex x;
  std::vector<Complex> small_roots;  // roots tending to 0 as x -> 0
  std::vector<Complex> large_roots;
  double max_residual = 0.0;
};

RootFamily solve_p_roots(int r, Complex x);
RootFamily solve_q_roots(int j, int k, Complex x);

// Conservative convergence guards: half the reciprocal growth base.
double vertical_guard(int r);    // 0.5 / (2^r (r+1))
double horizontal_guard(int k);  // 0.5 / 2^k

// Root-based evaluation of sum_{k>=1} count(k,r) x^k for fixed r >= 2.
Complex vertical_gf_eval(int r, Complex x);

// Root-based evaluation of sum_{r>=1} count(k,r) x^r for fixed k >= 2. The
// j=k term of the double sum has no small roots and contributes nothing.
Complex horizontal_gf_eval(int k, Complex x);

// The explicit radical expression for r=2, kept for differential testing.
Complex vertical_r2_closed_form(Complex x);

// Exact truncated reference series. Index k >= 2 of the vertical window is
// the balanced count; index 1 is the k=1 coefficient of the underlying
// integral representation (3/2 for r=2, -1 for r=3, 0 beyond), which the
// algebraic generating function includes even though no polygon corresponds
// to it.
BigRat vertical_series_coeff(int r, int k);
std::vector<BigRat> vertical_window(int r, int k_max);
Count horizontal_series_coeff(int k, int r);
std::vector<Count> horizontal_window(int k, int r_max);

Complex eval_rat_window(const std::vector<BigRat>& coeffs, Complex x);   // sum c_i x^i, c_0 ignored-if-absent
Complex eval_count_window(const std::vector<Count>& coeffs, Complex x);

// The series g with g (1-g)^2 = x; coefficient n is binom(3n-2, n-1)/n.
RatSeries g_series(int order);

// (10g^3 - 17g^2 + 7g - 1) / ((1-3g)(2g-1)(4g^2-6g+1)) as a series in x;
// coefficient of x^r equals the balanced triangle count at r-1 for r >= 2.
RatSeries van_hoeij_series(int order);

// (2g-1)(4g^2-6g+1) composed with g_series, for the 8x-1 identity check.
RatSeries van_hoeij_denominator_tail(int order);

}  // namespace polytri
