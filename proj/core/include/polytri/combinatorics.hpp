#pragma once

#include <polytri/bigint.hpp>
#include <polytri/poly.hpp>

namespace polytri {

// binom(n, k) over the combinatorial range. Returns 0 when k < 0, k > n, or
// n < 0; sums in the counting module clamp their own index ranges instead of
// relying on a signed extension.
Count binomial(long n, long k);

Count factorial(long n);

// C_n = binom(2n, n) / (n + 1); rejects n < 0.
Count catalan(long n);

// Counts l-subsets of {1..r-1} with no two adjacent elements: coefficient of
// x^l is binom(r-l, l), degree floor(r/2). Requires r >= 1.
IntPoly string_poly(int r);

// Chebyshev polynomial of the second kind via U_{r+1} = 2x U_r - U_{r-1}.
IntPoly chebyshev_u(int r);

// [x^m] string_poly(r)^k: the number of ways to pick m pairwise non-crossing
// forbidden-position diagonals across k independent strings.
Count a_coeff(int k, int r, long m);

namespace detail {

// [t^i] (1-t)^e for any integer exponent e (signed result).
BigInt coeff_pow_one_minus(long e, long i);

// [t^l] (1-2t)^(-m) for m >= 0 (equals 2^l * binom(m-1+l, l) when m >= 1).
BigInt coeff_inv_pow_one_minus_2t(long m, long l);

}  // namespace detail

}  // namespace polytri
