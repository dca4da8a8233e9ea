#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace polytri {

using Complex = std::complex<double>;
// Dense complex polynomial, coefficient of t^i at index i.
using CPoly = std::vector<Complex>;

Complex cpoly_eval(const CPoly& p, Complex t);
CPoly cpoly_derivative(const CPoly& p);

// All roots by the Durand-Kerner iteration, optionally warm-started.
std::vector<Complex> all_roots(const CPoly& p, const std::vector<Complex>* warm_start = nullptr);

struct TrackedRoots {
  std::vector<Complex> small;  // the roots that tend to 0 as the parameter tends to 0
  std::vector<Complex> large;
  double max_residual = 0.0;
};

// Follows the roots of poly_at(s * x_target) from s ~ 0 to s = 1 along a
// straight path, classifying as "small" the n_small roots that collapse to 0
// at the start. Throws when the small/large clusters fail to separate, which
// signals |x| beyond the convergence guard.
TrackedRoots track_small_roots(const std::function<CPoly(Complex)>& poly_at, Complex x_target,
                               int n_small);

}  // namespace polytri
