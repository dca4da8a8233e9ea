#include <polytri/gf_check.hpp>

#include <cmath>
#include <stdexcept>

#include <polytri/combinatorics.hpp>

namespace polytri {

namespace {

// (1-t)^e as an integer polynomial, e >= 0.
IntPoly one_minus_t_pow(int e) {
  IntPoly p;
  p.c.resize(static_cast<size_t>(e) + 1);
  for (int i = 0; i <= e; ++i) p.c[static_cast<size_t>(i)] = detail::coeff_pow_one_minus(e, i);
  p.normalize();
  return p;
}

IntPoly t_pow(int e) {
  IntPoly p;
  p.c.assign(static_cast<size_t>(e) + 1, BigInt(0));
  p.c.back() = 1;
  return p;
}

// Exact synthetic division by (1-2t); throws unless the remainder vanishes.
IntPoly div_by_one_minus_2t(const IntPoly& num) {
  if (num.is_zero()) return num;
  IntPoly q;
  q.c.assign(num.c.size() - 1, BigInt(0));
  BigInt carry = 0;  // q_{j-1}
  for (size_t j = 0; j + 1 < num.c.size(); ++j) {
    carry = num.c[j] + 2 * carry;
    q.c[j] = carry;
  }
  if (num.c.back() + 2 * carry != 0)
    throw std::logic_error("div_by_one_minus_2t: nonzero remainder");
  q.normalize();
  return q;
}

CPoly to_cpoly(const IntPoly& p) {
  CPoly out(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) out[i] = Complex(p.c[i].get_d(), 0.0);
  return out;
}

}  // namespace

IntPoly string_quotient_poly(int r) {
  if (r < 1) throw std::invalid_argument("string_quotient_poly: r must be >= 1");
  return div_by_one_minus_2t(one_minus_t_pow(r + 1) - t_pow(r + 1));
}

CPoly p_poly(int r, Complex x) {
  if (r < 2) throw std::invalid_argument("p_poly: r must be >= 2");
  IntPoly head = t_pow(r) * one_minus_t_pow(r);
  IntPoly w = string_quotient_poly(r);
  CPoly out(static_cast<size_t>(2 * r) + 1, Complex(0.0, 0.0));
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = Complex(head.coeff(static_cast<long>(i)).get_d(), 0.0) -
             x * Complex(w.coeff(static_cast<long>(i)).get_d(), 0.0);
  }
  return out;
}

CPoly q_poly(int j, int k, Complex x) {
  if (k < 2 || j < 0 || j > k) throw std::invalid_argument("q_poly: need 0 <= j <= k, k >= 2");
  IntPoly p = t_pow(k - j) * one_minus_t_pow(j);
  CPoly out = to_cpoly(p);
  if (out.empty()) out.resize(1);
  out[0] -= x;
  return out;
}

RootFamily solve_p_roots(int r, Complex x) {
  if (std::abs(x) > vertical_guard(r))
    throw std::invalid_argument("solve_p_roots: |x| beyond the convergence guard");
  TrackedRoots tracked = track_small_roots([r](Complex xv) { return p_poly(r, xv); }, x, r);
  RootFamily f;
  f.kind = RootFamily::Kind::vertical_p;
  f.r = r;
  f.x = x;
  f.small_roots = std::move(tracked.small);
  f.large_roots = std::move(tracked.large);
  f.max_residual = tracked.max_residual;
  return f;
}

RootFamily solve_q_roots(int j, int k, Complex x) {
  if (j >= k) throw std::invalid_argument("solve_q_roots: j = k has no small roots");
  if (std::abs(x) > horizontal_guard(k))
    throw std::invalid_argument("solve_q_roots: |x| beyond the convergence guard");
  TrackedRoots tracked =
      track_small_roots([j, k](Complex xv) { return q_poly(j, k, xv); }, x, k - j);
  RootFamily f;
  f.kind = RootFamily::Kind::horizontal_q;
  f.j = j;
  f.k = k;
  f.x = x;
  f.small_roots = std::move(tracked.small);
  f.large_roots = std::move(tracked.large);
  f.max_residual = tracked.max_residual;
  return f;
}

double vertical_guard(int r) { return 0.5 / (std::pow(2.0, r) * (r + 1)); }

double horizontal_guard(int k) { return 0.5 / std::pow(2.0, k); }

Complex vertical_gf_eval(int r, Complex x) {
  if (r < 2) throw std::invalid_argument("vertical_gf_eval: r must be >= 2");
  if (x == Complex(0.0, 0.0)) return 0.0;
  RootFamily f = solve_p_roots(r, x);
  CPoly p = p_poly(r, x);
  CPoly dp = cpoly_derivative(p);
  Complex acc = 0.0;
  for (Complex t : f.small_roots) {
    Complex tr = std::pow(t, r) * std::pow(1.0 - t, r) * (1.0 - 2.0 * t) * (1.0 - 2.0 * t);
    acc += tr / cpoly_eval(dp, t);
  }
  return -0.5 * acc;
}

Complex horizontal_gf_eval(int k, Complex x) {
  if (k < 2) throw std::invalid_argument("horizontal_gf_eval: k must be >= 2");
  if (x == Complex(0.0, 0.0)) return 0.0;
  Complex acc = 0.0;
  for (int j = 0; j < k; ++j) {  // the j = k polynomial has no small roots
    RootFamily f = solve_q_roots(j, k, x);
    Complex inner = 0.0;
    for (Complex t : f.small_roots) {
      Complex num = std::pow(t, j + 1) * std::pow(1.0 - t, k - j + 1);
      Complex den = std::pow(1.0 - 2.0 * t, k - 2) *
                    (Complex(static_cast<double>(k - j), 0.0) - static_cast<double>(k) * t);
      inner += num / den;
    }
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binomial(k, j).get_d() * inner;
  }
  return -0.5 * acc;
}

Complex vertical_r2_closed_form(Complex x) {
  Complex s1 = std::sqrt(x / (x + 4.0));
  Complex root_prod = std::sqrt(x * (x + 4.0));
  Complex sx = std::sqrt(x), s4 = std::sqrt(x + 4.0);
  Complex plus = std::sqrt(1.0 + 2.0 * x + 2.0 * root_prod) * (sx + s4) * (sx + s4);
  Complex minus = std::sqrt(1.0 + 2.0 * x - 2.0 * root_prod) * (sx - s4) * (sx - s4);
  return (plus - minus) * s1 / 8.0;
}

BigRat vertical_series_coeff(int r, int k) {
  if (r < 2 || k < 1) throw std::invalid_argument("vertical_series_coeff: need r >= 2, k >= 1");
  if (k >= 2) return BigRat(balanced_count({k, r}));
  // k = 1 coefficient of the integral representation:
  // -(1/2) [t^{r-1}] (1-t)(1-2t) = -(1/2) [t^{r-1}] (1 - 3t + 2t^2).
  switch (r - 1) {
    case 0: return BigRat(-1, 2);
    case 1: return BigRat(3, 2);
    case 2: return BigRat(-1);
    default: return BigRat(0);
  }
}

std::vector<BigRat> vertical_window(int r, int k_max) {
  std::vector<BigRat> w(static_cast<size_t>(k_max) + 1);
  for (int k = 1; k <= k_max; ++k) w[static_cast<size_t>(k)] = vertical_series_coeff(r, k);
  return w;
}

Count horizontal_series_coeff(int k, int r) {
  if (k < 2 || r < 1) throw std::invalid_argument("horizontal_series_coeff: need k >= 2, r >= 1");
  return balanced_count({k, r});
}

std::vector<Count> horizontal_window(int k, int r_max) {
  std::vector<Count> w(static_cast<size_t>(r_max) + 1);
  for (int r = 1; r <= r_max; ++r) w[static_cast<size_t>(r)] = horizontal_series_coeff(k, r);
  return w;
}

Complex eval_rat_window(const std::vector<BigRat>& coeffs, Complex x) {
  Complex acc = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + Complex(coeffs[i].get_d(), 0.0);
  return acc;
}

Complex eval_count_window(const std::vector<Count>& coeffs, Complex x) {
  Complex acc = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + Complex(coeffs[i].get_d(), 0.0);
  return acc;
}

RatSeries g_series(int order) {
  if (order < 1) throw std::invalid_argument("g_series: order must be >= 1");
  RatSeries defining(order);  // t (1-t)^2 = t - 2t^2 + t^3
  defining.set(1, 1);
  if (order >= 2) defining.set(2, -2);
  if (order >= 3) defining.set(3, 1);
  return series_reversion(defining);
}

namespace {

RatSeries poly_in_g(const std::vector<long>& coeffs, const RatSeries& g) {
  RatSeries outer(g.order);
  for (size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= g.order; ++i)
    outer.set(static_cast<int>(i), BigRat(coeffs[i]));
  return series_compose(outer, g);
}

}  // namespace

RatSeries van_hoeij_series(int order) {
  if (order < 2) throw std::invalid_argument("van_hoeij_series: order must be >= 2");
  RatSeries g = g_series(order);
  RatSeries num = poly_in_g({-1, 7, -17, 10}, g);
  // (1-3g)(2g-1)(4g^2-6g+1) = -1 + 11g - 40g^2 + 56g^3 - 24g^4
  RatSeries den = poly_in_g({-1, 11, -40, 56, -24}, g);
  RatSeries base = series_mul(num, series_inverse(den));
  // base expands to sum_{m>=0} count(3, m+1) x^m, the identity the Lagrange
  // inversion argument verifies. Reindex to the published form
  // sum_{r>=1} count(3, r-1) x^r, whose x^1 coefficient is the OEIS A087809
  // continuation value 1.
  RatSeries shifted(order);
  shifted.set(1, 1);
  for (int m = 0; m + 2 <= order; ++m) shifted.set(m + 2, base.coeff(m));
  return shifted;
}

RatSeries van_hoeij_denominator_tail(int order) {
  // (2g-1)(4g^2-6g+1) = -1 + 8g - 16g^2 + 8g^3
  return poly_in_g({-1, 8, -16, 8}, g_series(order));
}

}  // namespace polytri
