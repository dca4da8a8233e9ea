#include <polytri/asymptotics.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <polytri/combinatorics.hpp>

namespace polytri {

double PiMultiple::value() const { return coefficient.get_d() * M_PI; }

namespace {

// Coefficient of pi in the half-line integral of sin^lam(x)/x^kap.
BigRat sine_reduction(long lam, long kap, std::map<std::pair<long, long>, BigRat>& memo) {
  auto key = std::make_pair(lam, kap);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigRat result;
  if (kap == 1) {
    // int sin^{2m-1} x / x = pi binom(2m-2, m-1) / 2^{2m-1}
    result = BigRat(binomial(lam - 1, (lam - 1) / 2)) / BigRat(pow2(lam));
  } else if (kap == 2) {
    // reduce once in the exponent, then the cosine-weighted initial value
    result = BigRat(2 * binomial(lam - 2, lam / 2 - 1)) / BigRat(pow2(lam));
  } else {
    BigRat a = sine_reduction(lam - 2, kap - 2, memo);
    BigRat b = sine_reduction(lam, kap - 2, memo);
    result = (BigRat(lam * (lam - 1)) * a - BigRat(lam * lam) * b) / BigRat((kap - 1) * (kap - 2));
  }
  result.canonicalize();
  memo.emplace(key, result);
  return result;
}

}  // namespace

PiMultiple sine_integral(int k) {
  if (k < 3) throw std::invalid_argument("sine_integral: k must be >= 3");
  // substitution u -> u/2 contributes the factor 2^{k-3} on the full line
  static std::map<std::pair<long, long>, BigRat> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  BigRat half_line = sine_reduction(k, k - 2, memo);
  BigRat full = BigRat(pow2(k - 2)) * half_line;
  full.canonicalize();
  return PiMultiple{full};
}

AsymptoticEstimate asympt_r_to_inf(int k, int r) {
  if (k < 3) throw std::invalid_argument("asympt_r_to_inf: k must be >= 3");
  if (r < 1) throw std::invalid_argument("asympt_r_to_inf: r must be >= 1");
  AsymptoticEstimate e;
  double coeff = sine_integral(k).coefficient.get_d();  // the integral over pi
  e.log_value = static_cast<double>(r - 1) * k * std::log(2.0) +
                static_cast<double>(k - 3) * std::log(static_cast<double>(r)) + std::log(coeff);
  e.growth_base = 2.0;  // per-point limit as r grows
  return e;
}

AsymptoticEstimate asympt_k_to_inf(int k, int r) {
  if (k < 3 || r < 1) throw std::invalid_argument("asympt_k_to_inf: need k >= 3, r >= 1");
  AsymptoticEstimate e;
  const double big_r = static_cast<double>(r) * (r + 5) / 6.0;
  e.log_value = k * (r * std::log(2.0) + std::log(r + 1.0)) - std::log(16.0 * std::sqrt(M_PI)) -
                1.5 * std::log(big_r) - 1.5 * std::log(static_cast<double>(k));
  e.growth_base = std::pow(std::pow(2.0, r) * (r + 1), 1.0 / r);
  return e;
}

AsymptoticEstimate asympt_partial(int n_points, double alpha) {
  if (n_points < 3) throw std::invalid_argument("asympt_partial: need N >= 3");
  if (alpha < 0.0 || alpha > 0.5)
    throw std::invalid_argument("asympt_partial: alpha must lie in [0, 1/2]");
  AsymptoticEstimate e;
  const double base = (1.0 - alpha) * std::log(4.0) + alpha * std::log(3.0);
  e.log_value = n_points * base - std::log(16.0 * std::sqrt(M_PI)) -
                1.5 * std::log(1.0 + alpha / 3.0) - 1.5 * std::log(static_cast<double>(n_points));
  e.growth_base = std::exp(base);
  return e;
}

double log_ratio(const Count& exact, const AsymptoticEstimate& e) {
  return log_of(exact) - e.log_value;
}

GrowthPoint growth_factor(double r) {
  if (r < 1.0) throw std::invalid_argument("growth_factor: r must be >= 1");
  double lg = std::log(2.0) +
              (std::log(r + 1.0) + std::lgamma(2.0 * r - 1.0) - std::lgamma(r) - std::lgamma(r + 1.0)) / r;
  return GrowthPoint{r, std::exp(lg)};
}

GrowthMinimum growth_minimum() {
  auto f = [](double r) { return std::log(growth_factor(r).g); };
  // unimodality on [1,3]: the finite differences change sign exactly once
  const int grid = 100;
  int sign_changes = 0;
  double prev = f(1.0);
  double prev_diff = 0.0;
  for (int i = 1; i <= grid; ++i) {
    double x = 1.0 + 2.0 * i / grid;
    double cur = f(x);
    double diff = cur - prev;
    if (i > 1 && (diff > 0) != (prev_diff > 0)) ++sign_changes;
    prev = cur;
    prev_diff = diff;
  }
  if (sign_changes != 1) throw std::logic_error("growth_minimum: growth curve is not unimodal on [1,3]");

  double a = 1.0, b = 3.0;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-6) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  double rm = 0.5 * (a + b);
  return GrowthMinimum{rm, growth_factor(rm).g};
}

namespace {

struct LogIntegrand {
  // value = sign * exp(log_mag); log_mag = -inf encodes zero
  double log_mag = -std::numeric_limits<double>::infinity();
  double sign = 1.0;
};

double integrate_log_scaled(const std::function<LogIntegrand(double)>& f, double prefactor_log,
                            double sign_prefactor) {
  // locate the peak of the log-integrand on a coarse grid
  double peak = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 400; ++i) {
    double u = 0.05 * i;
    peak = std::max(peak, f(u).log_mag);
  }
  // truncate where the integrand falls 60 nats below the peak
  double upper = 20.0;
  while (upper < 1e7 && f(upper).log_mag > peak - 60.0) upper *= 2.0;

  auto g = [&](double u) {
    LogIntegrand v = f(u);
    if (!std::isfinite(v.log_mag)) return 0.0;
    return v.sign * std::exp(v.log_mag - peak);
  };
  // Geometric panels keep every adaptive call well conditioned: a single
  // interval spanning [0, ~1e6] starves the subdivision depth long before
  // the peak near the origin is resolved.
  double integral = 0.0;
  double lo = 0.0, hi = 1.0;
  while (lo < upper) {
    double error = 0.0;
    integral += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        g, lo, std::min(hi, upper), 12, 1e-13, &error);
    lo = hi;
    hi *= 2.0;
  }
  return sign_prefactor * std::exp(prefactor_log + peak) * 2.0 * integral;
}

}  // namespace

double quadrature_check(SubdivisionParams p) {
  p.validate();
  if (p.points() < 3 || p.points() > 30)
    throw std::invalid_argument("quadrature_check: need 3 <= k*r <= 30");
  const int k = p.k, r = p.r;

  // psi(u) = Im (1+2iu)^{r+1}, an odd polynomial; phi = psi / u.
  std::vector<double> phi_coeffs;  // coefficients of u^{2j}
  for (long j = 1; j <= r + 1; j += 2) {
    double c = binomial(r + 1, j).get_d() * std::pow(2.0, static_cast<double>(j));
    if (((j - 1) / 2) % 2 == 1) c = -c;
    phi_coeffs.push_back(c);
  }
  auto phi = [&](double u) {
    double u2 = u * u, acc = 0.0;
    for (size_t i = phi_coeffs.size(); i-- > 0;) acc = acc * u2 + phi_coeffs[i];
    return acc;
  };

  auto f = [&](double u) {
    LogIntegrand v;
    double ph = phi(u);
    double ps = ph * u;
    if (ph == 0.0 || ps == 0.0) return v;
    v.log_mag = (k - 2) * std::log(std::abs(ph)) + 2.0 * std::log(std::abs(ps)) -
                static_cast<double>(r) * k * std::log1p(4.0 * u * u);
    v.sign = (ph < 0.0 && (k - 2) % 2 != 0) ? -1.0 : 1.0;
    return v;
  };
  // total = 2^{(r-1)k}/pi * integral over the real line
  double prefactor_log = static_cast<double>(r - 1) * k * std::log(2.0) - std::log(M_PI);
  return integrate_log_scaled(f, prefactor_log, 1.0);
}

double quadrature_check_partial(PartialParams p) {
  p.validate();
  if (p.n_points > 30) throw std::invalid_argument("quadrature_check_partial: need N <= 30");
  const int N = p.n_points, s = p.subdivided_sides;
  auto f = [&](double u) {
    LogIntegrand v;
    double w = 1.0 - 4.0 * u * u / 3.0;
    if (u == 0.0 || (w == 0.0 && s > 0)) return v;
    v.log_mag = 2.0 * std::log(u) + s * std::log(std::abs(w)) - N * std::log1p(4.0 * u * u);
    v.sign = (w < 0.0 && s % 2 != 0) ? -1.0 : 1.0;
    return v;
  };
  double prefactor_log = (N - s) * std::log(4.0) + s * std::log(3.0) - std::log(M_PI);
  return integrate_log_scaled(f, prefactor_log, 1.0);
}

}  // namespace polytri
