#include <polytri/combinatorics.hpp>

#include <stdexcept>

namespace polytri {

Count binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Count r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Count factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Count r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Count catalan(long n) {
  if (n < 0) throw std::invalid_argument("catalan: negative index");
  return exact_div(binomial(2 * n, n), BigInt(n + 1));
}

IntPoly string_poly(int r) {
  if (r < 1) throw std::invalid_argument("string_poly: r must be >= 1");
  IntPoly p;
  p.c.reserve(static_cast<size_t>(r / 2) + 1);
  for (int l = 0; l <= r / 2; ++l) p.c.push_back(binomial(r - l, l));
  p.normalize();
  return p;
}

IntPoly chebyshev_u(int r) {
  if (r < 0) throw std::invalid_argument("chebyshev_u: r must be >= 0");
  IntPoly prev = IntPoly::one();           // U_0
  if (r == 0) return prev;
  IntPoly cur{{0, 2}};                     // U_1 = 2x
  IntPoly two_x{{0, 2}};
  for (int i = 1; i < r; ++i) {
    IntPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Count a_coeff(int k, int r, long m) {
  if (k < 1) throw std::invalid_argument("a_coeff: k must be >= 1");
  return poly_pow(string_poly(r), static_cast<unsigned>(k)).coeff(m);
}

namespace detail {

BigInt coeff_pow_one_minus(long e, long i) {
  if (i < 0) return 0;
  if (e >= 0) {
    if (i > e) return 0;
    BigInt b = binomial(e, i);
    return (i % 2 == 0) ? b : -b;
  }
  return binomial(-e - 1 + i, i);
}

BigInt coeff_inv_pow_one_minus_2t(long m, long l) {
  if (l < 0) return 0;
  if (m == 0) return l == 0 ? 1 : 0;
  return binomial(m - 1 + l, l) * pow2(l);
}

}  // namespace detail

}  // namespace polytri
