#include <polytri/counting.hpp>

#include <cassert>
#include <stdexcept>

namespace polytri {

using detail::coeff_inv_pow_one_minus_2t;
using detail::coeff_pow_one_minus;

void SubdivisionParams::validate() const {
  if (k < 2) throw std::invalid_argument("SubdivisionParams: k must be >= 2");
  if (r < 1) throw std::invalid_argument("SubdivisionParams: r must be >= 1");
}

void TriangleParams::validate() const {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("TriangleParams: subdivision counts must be >= 0");
}

void PartialParams::validate() const {
  if (n_points < 3) throw std::invalid_argument("PartialParams: need at least 3 points");
  if (subdivided_sides < 0 || 2 * subdivided_sides > n_points)
    throw std::invalid_argument("PartialParams: need 0 <= 2s <= N");
}

namespace {

void require_min_points(SubdivisionParams p) {
  p.validate();
  if (p.points() < 3) throw std::invalid_argument("balanced count: k*r must be >= 3");
}

}  // namespace

Count balanced_count_ie(SubdivisionParams p) {
  require_min_points(p);
  const long top = static_cast<long>(p.r / 2) * p.k;
  IntPoly choices = poly_pow(string_poly(p.r), static_cast<unsigned>(p.k));
  Count total = 0;
  for (long m = 0; m <= top; ++m) {
    Count term = choices.coeff(m) * catalan(p.points() - m - 2);
    if (m % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Count balanced_count_sum1(SubdivisionParams p) {
  require_min_points(p);
  const long k = p.k, r = p.r;
  Count total = 0;
  for (long j = 0; j <= k; ++j) {
    const long lmax = r * k - (r + 1) * j - 2;
    if (lmax < 0) continue;
    Count inner = 0;
    for (long l = 0; l <= lmax; ++l) {
      BigInt mid = coeff_inv_pow_one_minus_2t(k - 1, l);
      if (mid == 0) continue;
      inner += mid * coeff_pow_one_minus(k - (r + 1) * j, lmax - l);
    }
    Count term = binomial(k, j) * inner;
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Count balanced_count_sum2(SubdivisionParams p) {
  require_min_points(p);
  const long k = p.k, r = p.r;
  Count total = 0;
  for (long j = 0; j <= k; ++j) {
    const long lmax = r * k - (r + 1) * j - 1;
    if (lmax < 0) continue;
    Count inner = 0;
    for (long l = 0; l <= lmax; ++l) {
      BigInt mid = coeff_inv_pow_one_minus_2t(k - 2, l);
      if (mid == 0) continue;
      inner += mid * coeff_pow_one_minus(k - (r + 1) * j, lmax - l);
    }
    Count term = binomial(k, j) * inner;
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  // total now equals -2 * count; the division is exact.
  assert(mpz_even_p(total.get_mpz_t()));
  return exact_div(-total, BigInt(2));
}

Count balanced_count(SubdivisionParams p) {
  p.validate();
  if (p.k == 2 && p.r == 1) return 1;  // digon convention, matches the k=2 row
  return balanced_count_sum2(p);
}

// ---- k = 3 family ----

namespace {

void require_k3(int r, int min_r) {
  if (r < min_r) throw std::invalid_argument("k=3 formula: r out of range");
}

}  // namespace

Count k3_sum_formula(int r) {
  require_k3(r, 1);
  return balanced_count_sum2({3, r});
}

Count k3_halfsum_formula(int r) {
  require_k3(r, 1);
  // 2 * count = -[t^{3r-1}] (1-t)^3/(1-2t) + 3 sum_{j=0}^{r} [t^{2r-2-j}] (1-t)^{-(r-1+j)}.
  // For r >= 2 the first coefficient is 2^{3r-4} and the second factor is
  // binom(3r-4, 2r-2-j), which is the printed closed form; evaluating the
  // coefficients directly keeps the boundary case r=1 exact as well.
  BigInt head = 0;
  for (long d = 0; d <= 3 && d <= 3 * r - 1; ++d)
    head += coeff_pow_one_minus(3, d) * pow2(3 * r - 1 - d);
  BigInt tail = 0;
  for (long j = 0; j <= r; ++j) tail += coeff_pow_one_minus(-(r - 1 + j), 2 * r - 2 - j);
  BigInt doubled = -head + 3 * tail;
  assert(mpz_even_p(doubled.get_mpz_t()));
  return exact_div(doubled, BigInt(2));
}

Count k3_tail_formula(int r) {
  require_k3(r, 1);
  if (r == 1) return 1;  // 3r-4 < 0; value fixed by the defining coefficient extraction
  Count total = pow2(3 * r - 4);
  for (long j = 0; j <= r - 3; ++j) total -= 3 * binomial(3 * r - 4, j);
  return total;
}

Count k3_triple_binomial(int r) {
  require_k3(r, 1);
  const long n = r - 1;
  Count total = 0;
  for (long i = 0; i <= n; ++i)
    for (long j = 0; i + j <= n; ++j) {
      Count ab = binomial(n, i + j);
      if (ab == 0) continue;
      for (long k = 0; j + k <= n && i + k <= n; ++k)
        total += ab * binomial(n, j + k) * binomial(n, i + k);
    }
  return total;
}

Count k3_eight_power_formula(int r) {
  require_k3(r, 2);
  const long m = r - 2;
  Count total = 3 * binomial(3 * m + 2, m);
  for (long j = 0; j <= m; ++j) {
    // (2j+1) divides (5j+1) binom(3j,j): binom(3j,j)/(2j+1) is a Fuss-Catalan number.
    BigInt num = (5 * j + 1) * binomial(3 * j, j);
    total += exact_div(num, BigInt(2 * j + 1)) * int_pow(8, static_cast<unsigned long>(m - j));
  }
  return total;
}

bool k3_recurrence_holds(int r_max) {
  if (r_max < 3) throw std::invalid_argument("k3_recurrence_holds: r_max must be >= 3");
  for (int r = 2; r < r_max; ++r) {
    Count lhs = k3_tail_formula(r + 1) - 8 * k3_tail_formula(r);
    BigRat rhs = BigRat(3 * (5L * r * r - 19L * r + 6)) * BigRat(factorial(3 * r - 4)) /
                 BigRat(factorial(r - 2) * factorial(2 * r));
    rhs.canonicalize();
    if (rhs.get_den() != 1 || lhs != rhs.get_num()) return false;
  }
  return true;
}

// ---- subdivided triangle ----

namespace {

void require_not_all_zero(TriangleParams t) {
  t.validate();
  if (t.sum() == 0)
    throw std::invalid_argument("triangle count: (0,0,0) has no interior subdivision");
}

Count head_binomial_sum(long top, long lmax) {
  Count s = 0;
  for (long l = 0; l <= lmax; ++l) s += binomial(top, l);
  return s;
}

}  // namespace

Count triangle_d_corner_count(TriangleParams t) {
  require_not_all_zero(t);
  return binomial(t.sum() - 1, t.a - 1);
}

Count triangle_d_count(TriangleParams t) {
  require_not_all_zero(t);
  const long s = t.sum();
  return binomial(s - 1, t.a - 1) + binomial(s - 1, t.b - 1) + binomial(s - 1, t.c - 1);
}

Count triangle_t_count(TriangleParams t) {
  require_not_all_zero(t);
  const long s = t.sum();
  return pow2(s - 1) - head_binomial_sum(s - 1, t.a - 1) - head_binomial_sum(s - 1, t.b - 1) -
         head_binomial_sum(s - 1, t.c - 1);
}

Count triangle_count(TriangleParams t) {
  require_not_all_zero(t);
  const long s = t.sum();
  return pow2(s - 1) - head_binomial_sum(s - 1, t.a - 2) - head_binomial_sum(s - 1, t.b - 2) -
         head_binomial_sum(s - 1, t.c - 2);
}

Count triangle_binomial_sum(TriangleParams t) {
  t.validate();
  Count total = 0;
  for (long al = 0; al <= t.a; ++al)
    for (long be = 0; al + be <= t.a; ++be) {
      Count ca = binomial(t.a, al + be);
      for (long ga = 0; be + ga <= t.b && ga + al <= t.c; ++ga)
        total += ca * binomial(t.b, be + ga) * binomial(t.c, ga + al);
    }
  return total;
}

// ---- partial / indented / general ----

Count partial_count(PartialParams p) {
  p.validate();
  // N=3, s=1 sits outside the inclusion-exclusion hypothesis: the forbidden
  // pair of the subdivided side is a boundary edge of the triangle, not a
  // diagonal, so nothing is excluded and the count is 1. Analogous to the
  // (2,1) digon convention of the balanced family.
  if (p.n_points == 3 && p.subdivided_sides == 1) return 1;
  Count total = 0;
  for (long m = 0; m <= p.subdivided_sides; ++m) {
    Count term = binomial(p.subdivided_sides, m) * catalan(p.n_points - m - 2);
    if (m % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Count indented_count(SubdivisionParams p) {
  require_min_points(p);
  return balanced_count(p) * int_pow(catalan(p.r - 1), static_cast<unsigned long>(p.k));
}

Count general_count(std::span<const int> sides) {
  if (sides.size() < 3) throw std::invalid_argument("general_count: need at least 3 sides");
  long n = static_cast<long>(sides.size());
  IntPoly choices = IntPoly::one();
  for (int a : sides) {
    if (a < 0) throw std::invalid_argument("general_count: side subdivision must be >= 0");
    n += a;
    choices = choices * string_poly(a + 1);
  }
  if (n < 3) throw std::invalid_argument("general_count: need at least 3 points");
  Count total = 0;
  for (long m = 0; m <= choices.degree(); ++m) {
    Count term = choices.coeff(m) * catalan(n - m - 2);
    if (m % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Count general_count(const std::vector<int>& sides) {
  return general_count(std::span<const int>(sides));
}

}  // namespace polytri
