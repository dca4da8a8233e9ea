#include <doctest.h>

#include <complex>

#include <polytri/gf_check.hpp>

using namespace polytri;

namespace {

// Independent division oracle: long division of ((1-t)^{r+1} - t^{r+1}) by
// (1-2t) over rationals; returns remainder.
BigRat division_remainder(int r, IntPoly* quotient_out) {
  std::vector<BigRat> num(static_cast<size_t>(r) + 2);
  for (int i = 0; i <= r + 1; ++i) {
    BigInt b = binomial(r + 1, i);
    num[static_cast<size_t>(i)] = BigRat((i % 2 == 0) ? b : -b);
  }
  num[static_cast<size_t>(r + 1)] -= 1;  // subtract t^{r+1}
  // divide by -2t + 1, highest degree first
  std::vector<BigRat> q(static_cast<size_t>(r) + 1);
  for (int d = r + 1; d >= 1; --d) {
    BigRat coef = num[static_cast<size_t>(d)] / BigRat(-2);
    q[static_cast<size_t>(d - 1)] = coef;
    num[static_cast<size_t>(d)] = 0;
    num[static_cast<size_t>(d - 1)] -= coef;
  }
  if (quotient_out) {
    quotient_out->c.clear();
    for (auto& v : q) {
      v.canonicalize();
      REQUIRE(v.get_den() == 1);
      quotient_out->c.push_back(v.get_num());
    }
    quotient_out->normalize();
  }
  return num[0];
}

double cabs(Complex z) { return std::abs(z); }

}  // namespace

TEST_CASE("string quotient polynomial and exact divisibility") {
  CHECK(string_quotient_poly(2) == IntPoly({1, -1, 1}));
  for (int r = 1; r <= 20; ++r) {
    IntPoly q;
    CHECK(division_remainder(r, &q) == 0);
    CHECK(q == string_quotient_poly(r));
  }
}

TEST_CASE("p_poly matches the explicit r=2 display") {
  // t^2 (1-t)^2 - x (t^2 - t + 1)
  Complex x(0.01, 0.0);
  CPoly p = p_poly(2, x);
  CHECK(cabs(p[0] - (-x)) < 1e-15);
  CHECK(cabs(p[1] - x) < 1e-15);
  CHECK(cabs(p[2] - (1.0 - x)) < 1e-15);
  CHECK(cabs(p[3] - Complex(-2.0, 0.0)) < 1e-15);
  CHECK(cabs(p[4] - Complex(1.0, 0.0)) < 1e-15);
  CPoly p0 = p_poly(2, Complex(0.0, 0.0));
  CHECK(cabs(p0[0]) < 1e-15);
  CHECK(cabs(p0[2] - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("small roots of the r=2 family match the radical formulas") {
  double xv = 0.01;
  RootFamily f = solve_p_roots(2, Complex(xv, 0.0));
  REQUIRE(f.small_roots.size() == 2);
  CHECK(f.max_residual < 1e-12);
  double t1 = 0.5 * (1.0 - std::sqrt(1.0 + 2 * xv - 2 * std::sqrt(xv + 4) * std::sqrt(xv)));
  double t2 = 0.5 * (1.0 - std::sqrt(1.0 + 2 * xv + 2 * std::sqrt(xv + 4) * std::sqrt(xv)));
  double lo = std::min(t1, t2), hi = std::max(t1, t2);
  std::vector<double> got{f.small_roots[0].real(), f.small_roots[1].real()};
  std::sort(got.begin(), got.end());
  CHECK(cabs(f.small_roots[0].imag()) < 1e-12);
  CHECK(cabs(f.small_roots[1].imag()) < 1e-12);
  CHECK(std::abs(got[0] - lo) < 1e-12);
  CHECK(std::abs(got[1] - hi) < 1e-12);
}

TEST_CASE("q roots for j=0 are the k-th roots of x") {
  int k = 4;
  Complex x(0.01, 0.0);
  RootFamily f = solve_q_roots(0, k, x);
  REQUIRE(f.small_roots.size() == 4);
  double mag = std::pow(0.01, 0.25);
  for (Complex t : f.small_roots) {
    CHECK(std::abs(cabs(t) - mag) < 1e-12);
    CHECK(cabs(std::pow(t, k) - x) < 1e-12);
  }
}

TEST_CASE("three small roots for r=3 with tiny residuals") {
  RootFamily f = solve_p_roots(3, Complex(0.001, 0.0));
  CHECK(f.small_roots.size() == 3);
  CHECK(f.large_roots.size() == 3);
  CHECK(f.max_residual < 1e-12);
}

TEST_CASE("root multiset symmetry under t -> 1-t") {
  for (int r = 2; r <= 6; ++r) {
    Complex x(0.3 * vertical_guard(r), 0.1 * vertical_guard(r));
    RootFamily f = solve_p_roots(r, x);
    // the large roots are 1 - small roots, as multisets
    std::vector<Complex> mirrored;
    for (Complex s : f.small_roots) mirrored.push_back(1.0 - s);
    for (Complex m : mirrored) {
      double best = 1e9;
      for (Complex l : f.large_roots) best = std::min(best, cabs(m - l));
      CHECK(best < 1e-10);
    }
  }
}

TEST_CASE("vertical generating function matches the exact series") {
  struct Case {
    int r;
    double x;
    int k_max;
  };
  for (Case c : {Case{2, 0.005, 25}, Case{3, 0.005, 25}, Case{4, 0.005, 35}}) {
    Complex v = vertical_gf_eval(c.r, Complex(c.x, 0.0));
    Complex ref = eval_rat_window(vertical_window(c.r, c.k_max), Complex(c.x, 0.0));
    CAPTURE(c.r);
    CHECK(cabs(v - ref) < 1e-10);
  }
  CHECK(cabs(vertical_gf_eval(3, Complex(0.0, 0.0))) == 0.0);
}

TEST_CASE("vertical closed form for r=2 agrees with the root evaluation") {
  for (double xv : {0.002, 0.005, 0.01, 0.02}) {
    Complex a = vertical_gf_eval(2, Complex(xv, 0.0));
    Complex b = vertical_r2_closed_form(Complex(xv, 0.0));
    CHECK(cabs(a - b) < 1e-10);
  }
}

TEST_CASE("horizontal generating function matches the exact series") {
  struct Case {
    int k;
    double x;
    int r_max;
  };
  for (Case c : {Case{2, 0.1, 45}, Case{3, 0.01, 30}, Case{4, 0.005, 30}, Case{5, 0.005, 25}}) {
    Complex v = horizontal_gf_eval(c.k, Complex(c.x, 0.0));
    Complex ref = eval_count_window(horizontal_window(c.k, c.r_max), Complex(c.x, 0.0));
    CAPTURE(c.k);
    CHECK(cabs(v - ref) < 1e-10);
  }
}

TEST_CASE("both generating functions at five sampled points per parameter") {
  const double fractions[] = {0.1, 0.2, 0.3, 0.4, 0.45};
  for (int r : {2, 3, 4}) {
    auto window = vertical_window(r, 40);
    for (double f : fractions) {
      Complex x(f * vertical_guard(r), 0.0);
      Complex got = vertical_gf_eval(r, x);
      Complex ref = eval_rat_window(window, x);
      CAPTURE(r);
      CAPTURE(f);
      CHECK(cabs(got - ref) / cabs(ref) < 1e-8);
    }
  }
  for (int k : {2, 3, 4, 5}) {
    auto window = horizontal_window(k, 50);
    for (double f : fractions) {
      Complex x(f * horizontal_guard(k), 0.0);
      Complex got = horizontal_gf_eval(k, x);
      Complex ref = eval_count_window(window, x);
      CAPTURE(k);
      CAPTURE(f);
      CHECK(cabs(got - ref) / cabs(ref) < 1e-8);
    }
  }
}

TEST_CASE("boundary coefficients of the vertical representation") {
  CHECK(vertical_series_coeff(2, 1) == BigRat(3, 2));
  CHECK(vertical_series_coeff(3, 1) == BigRat(-1));
  CHECK(vertical_series_coeff(4, 1) == 0);
  CHECK(vertical_series_coeff(5, 1) == 0);
  CHECK(vertical_series_coeff(2, 3) == 4);
}

TEST_CASE("convergence guards reject large evaluation points") {
  CHECK_THROWS_AS(vertical_gf_eval(2, Complex(0.2, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(horizontal_gf_eval(3, Complex(0.2, 0.0)), std::invalid_argument);
}

TEST_CASE("g series by reversion and by the binomial formula") {
  RatSeries g = g_series(30);
  CHECK(g.coeff(1) == 1);
  CHECK(g.coeff(2) == 2);
  CHECK(g.coeff(3) == 7);
  for (int n = 1; n <= 30; ++n) {
    BigRat expected = BigRat(binomial(3 * n - 2, n - 1)) / BigRat(n);
    expected.canonicalize();
    CHECK(g.coeff(n) == expected);
    CHECK(g.coeff(n).get_den() == 1);
    CHECK(g.coeff(n) > 0);
  }
  // divisibility continues: n | binom(3n-2, n-1) for n <= 100
  for (long n = 1; n <= 100; ++n) CHECK(binomial(3 * n - 2, n - 1) % n == 0);

  // defining identity g (1-g)^2 = x at order 30
  RatSeries one_minus_g(30);
  one_minus_g.set(0, 1);
  for (int i = 1; i <= 30; ++i) one_minus_g.set(i, -g.coeff(i));
  RatSeries lhs = series_mul(g, series_mul(one_minus_g, one_minus_g));
  CHECK(lhs == RatSeries::identity(30));
}

TEST_CASE("formula coefficients satisfy the defining identity at order 100") {
  const int ord = 100;
  RatSeries g(ord);
  for (long n = 1; n <= ord; ++n) {
    BigRat c = BigRat(binomial(3 * n - 2, n - 1)) / BigRat(n);
    c.canonicalize();
    CHECK(c.get_den() == 1);
    CHECK(c > 0);
    g.set(static_cast<int>(n), c);
  }
  RatSeries one_minus_g(ord);
  one_minus_g.set(0, 1);
  for (int i = 1; i <= ord; ++i) one_minus_g.set(i, -g.coeff(i));
  CHECK(series_mul(g, series_mul(one_minus_g, one_minus_g)) == RatSeries::identity(ord));
}

TEST_CASE("compact generating function reproduces the k=3 counts") {
  RatSeries s = van_hoeij_series(31);
  CHECK(s.coeff(3) == 4);
  CHECK(s.coeff(5) == 229);
  CHECK(s.coeff(7) == 14974);
  for (int r = 1; r <= 30; ++r) {
    BigRat expected{balanced_count({3, r})};
    CHECK(s.coeff(r + 1) == expected);
  }
}

TEST_CASE("denominator tail simplifies to 8x - 1") {
  RatSeries tail = van_hoeij_denominator_tail(30);
  CHECK(tail.coeff(0) == -1);
  CHECK(tail.coeff(1) == 8);
  for (int i = 2; i <= 30; ++i) CHECK(tail.coeff(i) == 0);
}
