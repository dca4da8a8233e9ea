#pragma once

#include <vector>

#include <polytri/bigint.hpp>

namespace polytri {

// Truncated power series with exact rational coefficients. Coefficients of
// x^0 .. x^order are known; anything beyond is unknown, not zero. mpq keeps
// every coefficient gcd-reduced with a positive denominator, so operator==
// is structural equality.
struct RatSeries {
  int order = 0;
  std::vector<BigRat> c;  // size order + 1

  RatSeries() : c(1) {}
  explicit RatSeries(int ord) : order(ord), c(static_cast<size_t>(ord) + 1) {}

  static RatSeries identity(int ord) {  // the series x
    RatSeries s(ord);
    if (ord >= 1) s.c[1] = 1;
    return s;
  }

  BigRat coeff(int i) const { return (i < 0 || i > order) ? BigRat(0) : c[static_cast<size_t>(i)]; }
  void set(int i, const BigRat& v) { c.at(static_cast<size_t>(i)) = v; }

  RatSeries truncated(int new_order) const;

  bool operator==(const RatSeries&) const = default;
};

RatSeries operator+(const RatSeries& a, const RatSeries& b);
RatSeries operator-(const RatSeries& a, const RatSeries& b);
RatSeries series_mul(const RatSeries& a, const RatSeries& b);

// outer(inner); requires inner constant term zero.
RatSeries series_compose(const RatSeries& outer, const RatSeries& inner);

// Compositional inverse: requires zero constant term and nonzero linear term.
RatSeries series_reversion(const RatSeries& a);

// Multiplicative inverse: requires nonzero constant term.
RatSeries series_inverse(const RatSeries& a);

}  // namespace polytri
