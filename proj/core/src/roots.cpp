#include <polytri/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace polytri {

Complex cpoly_eval(const CPoly& p, Complex t) {
  Complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

CPoly cpoly_derivative(const CPoly& p) {
  CPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(static_cast<double>(i) * p[i]);
  return d;
}

namespace {

int true_degree(const CPoly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && std::abs(p[static_cast<size_t>(d)]) == 0.0) --d;
  return d;
}

double coeff_scale(const CPoly& p) {
  double s = 0.0;
  for (auto c : p) s = std::max(s, std::abs(c));
  return s > 0 ? s : 1.0;
}

}  // namespace

std::vector<Complex> all_roots(const CPoly& poly, const std::vector<Complex>* warm_start) {
  const int deg = true_degree(poly);
  if (deg < 1) throw std::invalid_argument("all_roots: degree must be >= 1");
  CPoly p(poly.begin(), poly.begin() + deg + 1);
  const Complex lead = p.back();
  for (auto& c : p) c /= lead;

  std::vector<Complex> z(static_cast<size_t>(deg));
  if (warm_start && static_cast<int>(warm_start->size()) == deg) {
    z = *warm_start;
  } else {
    // Deterministic spiral start inside a radius bound on the roots.
    double radius = 0.0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(p[static_cast<size_t>(i)]));
    radius = 1.0 + radius;
    for (int i = 0; i < deg; ++i) {
      double angle = 2.0 * M_PI * i / deg + 0.4;
      z[static_cast<size_t>(i)] = 0.5 * radius * Complex(std::cos(angle), std::sin(angle));
    }
  }

  for (int iter = 0; iter < 600; ++iter) {
    double shift = 0.0;
    for (int i = 0; i < deg; ++i) {
      Complex denom = 1.0;
      for (int j = 0; j < deg; ++j)
        if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
      Complex delta = cpoly_eval(p, z[static_cast<size_t>(i)]) / denom;
      z[static_cast<size_t>(i)] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-15) break;
  }
  return z;
}

TrackedRoots track_small_roots(const std::function<CPoly(Complex)>& poly_at, Complex x_target,
                               int n_small) {
  // Cold solve very close to 0, where the small cluster is unambiguous.
  const double delta = 1e-7;
  std::vector<Complex> roots = all_roots(poly_at(x_target * delta));
  std::sort(roots.begin(), roots.end(),
            [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  const int deg = static_cast<int>(roots.size());
  if (n_small > deg) throw std::invalid_argument("track_small_roots: n_small exceeds degree");
  if (n_small < deg) {
    double lo = std::abs(roots[static_cast<size_t>(n_small - 1)]);
    double hi = std::abs(roots[static_cast<size_t>(n_small)]);
    if (lo > 0.5 * hi)
      throw std::runtime_error("track_small_roots: small/large clusters do not separate near 0");
  }

  // Geometric continuation from delta to 1, re-polishing at every step with a
  // warm-started full solve; nearest-neighbour matching keeps the labels.
  const int steps = 48;
  for (int s = 1; s <= steps; ++s) {
    double mag = delta * std::pow(1.0 / delta, static_cast<double>(s) / steps);
    CPoly p = poly_at(x_target * mag);
    std::vector<Complex> next = all_roots(p, &roots);
    // match each tracked root to the closest new root
    std::vector<bool> taken(next.size(), false);
    std::vector<Complex> matched(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) {
      int best = -1;
      double best_d = 0.0;
      for (size_t j = 0; j < next.size(); ++j) {
        if (taken[j]) continue;
        double d = std::abs(next[j] - roots[i]);
        if (best < 0 || d < best_d) best = static_cast<int>(j), best_d = d;
      }
      taken[static_cast<size_t>(best)] = true;
      matched[i] = next[static_cast<size_t>(best)];
    }
    roots = std::move(matched);
  }

  CPoly final_poly = poly_at(x_target);
  TrackedRoots out;
  double scale = coeff_scale(final_poly);
  for (int i = 0; i < deg; ++i) {
    double residual = std::abs(cpoly_eval(final_poly, roots[static_cast<size_t>(i)])) / scale;
    out.max_residual = std::max(out.max_residual, residual);
    if (i < n_small)
      out.small.push_back(roots[static_cast<size_t>(i)]);
    else
      out.large.push_back(roots[static_cast<size_t>(i)]);
  }
  if (out.max_residual > 1e-12)
    throw std::runtime_error("track_small_roots: residual exceeds 1e-12, |x| too large");

  // The clusters must still be distinct at the target.
  for (auto s : out.small)
    for (auto l : out.large)
      if (std::abs(s - l) < 1e-9)
        throw std::runtime_error("track_small_roots: clusters collide, |x| too large");
  return out;
}

}  // namespace polytri
