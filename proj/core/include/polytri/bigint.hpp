#pragma once

#include <cmath>
#include <string>

#include <gmpxx.h>

namespace polytri {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Exact non-negative triangulation count. Signed intermediates appear only
// inside inclusion-exclusion sums; every public counting routine returns a
// value that is >= 0.
using Count = BigInt;

inline BigInt int_pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt pow2(long exp) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(exp));
  return r;
}

// q must divide n exactly.
inline BigInt exact_div(const BigInt& n, const BigInt& q) {
  BigInt r;
  mpz_divexact(r.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
  return r;
}

// log2 of a positive integer, accurate to double precision.
inline double log2_of(const BigInt& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

inline double log_of(const BigInt& v) { return log2_of(v) * std::log(2.0); }

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace polytri
