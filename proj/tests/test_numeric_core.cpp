#include <doctest.h>

#include <random>

#include <polytri/combinatorics.hpp>
#include <polytri/series.hpp>

using namespace polytri;

TEST_CASE("binomial over the combinatorial range") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(-3, 2) == 0);
  CHECK(binomial(7, -1) == 0);
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(5) == 42);
  CHECK(catalan(14) == 2674440);
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
  // divisibility: (n+1) | binom(2n, n)
  for (long n = 0; n <= 300; ++n) CHECK(catalan(n) * (n + 1) == binomial(2 * n, n));
}

TEST_CASE("string polynomial") {
  CHECK(string_poly(1) == IntPoly({1}));
  CHECK(string_poly(2) == IntPoly({1, 1}));
  CHECK(string_poly(4) == IntPoly({1, 3, 1}));
  CHECK_THROWS_AS(string_poly(0), std::invalid_argument);
  for (int r = 1; r <= 16; ++r) CHECK(string_poly(r).degree() == r / 2);
}

TEST_CASE("chebyshev U and the alternating-coefficient identity") {
  CHECK(chebyshev_u(0) == IntPoly({1}));
  CHECK(chebyshev_u(1) == IntPoly({0, 2}));
  CHECK(chebyshev_u(2) == IntPoly({-1, 0, 4}));
  for (int r = 1; r <= 30; ++r) {
    IntPoly u = chebyshev_u(r);
    for (int l = 0; l <= r / 2; ++l) {
      BigInt expected = binomial(r - l, l) * pow2(r - 2 * l);
      if (l % 2 != 0) expected = -expected;
      CHECK(u.coeff(r - 2 * l) == expected);
    }
    for (int d = 0; d <= u.degree(); ++d)
      if ((r - d) % 2 != 0) CHECK(u.coeff(d) == 0);
  }
}

TEST_CASE("a_coeff values and sum rule") {
  CHECK(a_coeff(3, 2, 1) == 3);
  CHECK(a_coeff(3, 2, 0) == 1);
  CHECK(a_coeff(3, 2, 3) == 1);
  CHECK(a_coeff(3, 2, 4) == 0);
  for (int k = 1; k <= 8; ++k)
    for (int r = 1; r <= 8; ++r) {
      CHECK(a_coeff(k, r, 0) == 1);
      Count total = 0;
      for (long m = 0; m <= static_cast<long>(r / 2) * k; ++m) total += a_coeff(k, r, m);
      CHECK(total == int_pow(string_poly(r).eval(BigInt(1)), static_cast<unsigned long>(k)));
    }
}

TEST_CASE("coefficient helpers for (1-t)^e and (1-2t)^-m") {
  using detail::coeff_inv_pow_one_minus_2t;
  using detail::coeff_pow_one_minus;
  CHECK(coeff_pow_one_minus(3, 1) == -3);
  CHECK(coeff_pow_one_minus(3, 4) == 0);
  CHECK(coeff_pow_one_minus(0, 0) == 1);
  CHECK(coeff_pow_one_minus(0, 1) == 0);
  CHECK(coeff_pow_one_minus(-2, 2) == 3);   // binom(3, 2)
  CHECK(coeff_pow_one_minus(-1, 5) == 1);   // geometric series
  CHECK(coeff_inv_pow_one_minus_2t(0, 0) == 1);
  CHECK(coeff_inv_pow_one_minus_2t(0, 3) == 0);
  for (long l = 0; l <= 6; ++l) CHECK(coeff_inv_pow_one_minus_2t(2, l) == (l + 1) * pow2(l));
}

namespace {

RatSeries random_series(std::mt19937& rng, int order, bool unit_linear) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  RatSeries s(order);
  for (int i = 1; i <= order; ++i) {
    BigRat v(num(rng), den(rng));
    v.canonicalize();
    s.set(i, v);
  }
  if (unit_linear && s.coeff(1) == 0) s.set(1, BigRat(1, 2));
  return s;
}

}  // namespace

TEST_CASE("series arithmetic basics") {
  RatSeries one_plus_x(4);
  one_plus_x.set(0, 1);
  one_plus_x.set(1, 1);
  RatSeries sq = series_mul(one_plus_x, one_plus_x);
  CHECK(sq.coeff(0) == 1);
  CHECK(sq.coeff(1) == 2);
  CHECK(sq.coeff(2) == 1);
  CHECK(sq.coeff(3) == 0);

  CHECK(series_reversion(RatSeries::identity(6)) == RatSeries::identity(6));

  RatSeries defining(3);
  defining.set(1, 1);
  defining.set(2, -2);
  defining.set(3, 1);
  RatSeries g = series_reversion(defining);
  CHECK(g.coeff(1) == 1);
  CHECK(g.coeff(2) == 2);
  CHECK(g.coeff(3) == 7);
}

TEST_CASE("series reversion composes to the identity") {
  std::mt19937 rng(20240301);
  for (int trial = 0; trial < 12; ++trial) {
    RatSeries a = random_series(rng, 10, true);
    RatSeries b = series_reversion(a);
    CHECK(series_compose(b, a) == RatSeries::identity(10));
    CHECK(series_compose(a, b) == RatSeries::identity(10));
  }
}

TEST_CASE("series inverse multiplies to one") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    RatSeries a = random_series(rng, 9, false);
    a.set(0, BigRat(3, 2));
    RatSeries inv = series_inverse(a);
    RatSeries prod = series_mul(a, inv);
    CHECK(prod.coeff(0) == 1);
    for (int i = 1; i <= 9; ++i) CHECK(prod.coeff(i) == 0);
  }
}

TEST_CASE("series precondition violations are rejected") {
  RatSeries a(4);
  a.set(0, 1);
  CHECK_THROWS_AS(series_compose(a, a), std::invalid_argument);
  CHECK_THROWS_AS(series_reversion(a), std::invalid_argument);
  RatSeries no_linear(4);
  CHECK_THROWS_AS(series_reversion(no_linear), std::invalid_argument);
  CHECK_THROWS_AS(series_inverse(no_linear), std::invalid_argument);
}
