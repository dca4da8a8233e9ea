#pragma once

#include <vector>

#include <polytri/bigint.hpp>

namespace polytri {

// Dense integer polynomial, coefficient of x^i at index i.
// Invariant: no trailing zero coefficient (the zero polynomial is empty).
struct IntPoly {
  std::vector<BigInt> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { normalize(); }

  static IntPoly zero() { return IntPoly{}; }
  static IntPoly one() { return IntPoly{{1}}; }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }

  BigInt coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c.size())) return 0;
    return c[static_cast<size_t>(i)];
  }

  BigInt eval(const BigInt& x) const;
  BigRat eval(const BigRat& x) const;

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool operator==(const IntPoly&) const = default;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& base, unsigned exp);

}  // namespace polytri
