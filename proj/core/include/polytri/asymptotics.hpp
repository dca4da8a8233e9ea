#pragma once

#include <polytri/bigint.hpp>
#include <polytri/counting.hpp>

namespace polytri {

// An exact rational multiple of pi.
struct PiMultiple {
  BigRat coefficient;
  double value() const;
};

// Integral over the real line of sin^k(2u) / u^(k-2), computed exactly by
// the two-step reduction of power and exponent seeded with the Wallis-type
// initial integrals. k >= 3.
PiMultiple sine_integral(int k);

struct AsymptoticEstimate {
  double log_value = 0.0;   // natural log of the estimate
  double growth_base = 1.0; // per-point exponential base of the regime
};

// 2^{(r-1)k} r^{k-3} * sine_integral(k)/pi, the fixed-k large-r regime.
AsymptoticEstimate asympt_r_to_inf(int k, int r);

// (2^r (r+1))^k / (16 sqrt(pi) (r(r+5)/6)^{3/2} k^{3/2}), the large-k regime.
AsymptoticEstimate asympt_k_to_inf(int k, int r);

// (4^{1-a} 3^a)^N / (16 sqrt(pi) (1+a/3)^{3/2} N^{3/2}) for a = s/N in [0, 1/2].
AsymptoticEstimate asympt_partial(int n_points, double alpha);

// log(exact / estimate) evaluated in log space; exact counts never leave
// the integer domain.
double log_ratio(const Count& exact, const AsymptoticEstimate& e);

struct GrowthPoint {
  double r = 0.0;
  double g = 0.0;  // per-point growth 2 (r+1)^{1/r} C_{r-1}^{1/r}
};

// Real-r extension through log-gamma.
GrowthPoint growth_factor(double r);

struct GrowthMinimum {
  double r = 0.0;
  double g = 0.0;
};

// Golden-section search on [1,3] after a grid unimodality check.
GrowthMinimum growth_minimum();

// Adaptive quadrature of the real-line integral representation of the
// balanced count; the integrand is evaluated in log-magnitude + sign form.
// Guard: k*r <= 30.
double quadrature_check(SubdivisionParams p);

// Same for the partially subdivided polygon, N <= 30.
double quadrature_check_partial(PartialParams p);

}  // namespace polytri
