#include <polytri/series.hpp>

#include <algorithm>
#include <stdexcept>

namespace polytri {

RatSeries RatSeries::truncated(int new_order) const {
  if (new_order > order) throw std::invalid_argument("truncated: cannot extend a series");
  RatSeries r(new_order);
  std::copy(c.begin(), c.begin() + new_order + 1, r.c.begin());
  return r;
}

RatSeries operator+(const RatSeries& a, const RatSeries& b) {
  RatSeries r(std::min(a.order, b.order));
  for (int i = 0; i <= r.order; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

RatSeries operator-(const RatSeries& a, const RatSeries& b) {
  RatSeries r(std::min(a.order, b.order));
  for (int i = 0; i <= r.order; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

RatSeries series_mul(const RatSeries& a, const RatSeries& b) {
  RatSeries r(std::min(a.order, b.order));
  for (int i = 0; i <= r.order; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; i + j <= r.order; ++j) {
      if (b.c[j] == 0) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return r;
}

RatSeries series_compose(const RatSeries& outer, const RatSeries& inner) {
  if (inner.coeff(0) != 0)
    throw std::invalid_argument("series_compose: inner series must have zero constant term");
  int ord = std::min(outer.order, inner.order);
  RatSeries result(ord);
  RatSeries power(ord);
  power.c[0] = 1;  // inner^0
  result.c[0] = outer.coeff(0);
  for (int i = 1; i <= ord; ++i) {
    power = series_mul(power, inner.truncated(ord));
    if (outer.coeff(i) == 0) continue;
    for (int j = 0; j <= ord; ++j) result.c[j] += outer.coeff(i) * power.c[j];
  }
  return result;
}

RatSeries series_reversion(const RatSeries& a) {
  if (a.coeff(0) != 0)
    throw std::invalid_argument("series_reversion: constant term must be zero");
  if (a.coeff(1) == 0)
    throw std::invalid_argument("series_reversion: linear term must be nonzero");
  int ord = a.order;
  RatSeries b(ord);
  if (ord >= 1) b.c[1] = BigRat(1) / a.coeff(1);
  // Fix coefficients one order at a time: perturbing b[n] by d changes
  // (a o b)[n] by a1 * d and nothing below n.
  for (int n = 2; n <= ord; ++n) {
    RatSeries comp = series_compose(a, b);
    b.c[n] -= comp.c[n] / a.coeff(1);
  }
  return b;
}

RatSeries series_inverse(const RatSeries& a) {
  if (a.coeff(0) == 0)
    throw std::invalid_argument("series_inverse: constant term must be nonzero");
  RatSeries r(a.order);
  r.c[0] = BigRat(1) / a.c[0];
  for (int n = 1; n <= a.order; ++n) {
    BigRat acc = 0;
    for (int j = 1; j <= n; ++j) acc += a.c[j] * r.c[n - j];
    r.c[n] = -acc / a.c[0];
  }
  return r;
}

}  // namespace polytri
