#include <polytri/poly.hpp>

#include <algorithm>

namespace polytri {

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRat IntPoly::eval(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<long>(i)) + b.coeff(static_cast<long>(i));
  r.normalize();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<long>(i)) - b.coeff(static_cast<long>(i));
  r.normalize();
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly::zero();
  IntPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.normalize();
  return r;
}

IntPoly poly_pow(const IntPoly& base, unsigned exp) {
  IntPoly result = IntPoly::one();
  IntPoly sq = base;
  while (exp > 0) {
    if (exp & 1u) result = result * sq;
    exp >>= 1u;
    if (exp > 0) sq = sq * sq;
  }
  return result;
}

}  // namespace polytri
