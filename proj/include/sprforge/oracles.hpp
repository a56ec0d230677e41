#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sprforge/poly.hpp"
#include "sprforge/realpart.hpp"
#include "sprforge/roots.hpp"
#include "sprforge/segment.hpp"

namespace sprforge::oracles {

/// Brute-force reference results. Deliberately simple and slow; these never
/// read certificates, only raw polynomials.
struct GridReport {
  double min_value = 0.0;
  double argmin = 0.0;
  std::size_t samples = 0;
  double lo = 0.0, hi = 0.0;
};

/// Symmetric frequency grid, linear inside |omega| <= 1 and log-spaced out to
/// omega_max. SPR violations cluster both near zero and at mid frequencies.
inline std::vector<double> hybrid_omega_grid(double omega_max, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("hybrid_omega_grid: samples >= 2 required");
  if (!(omega_max > 1.0)) throw std::invalid_argument("hybrid_omega_grid: omega_max must exceed 1");
  const std::size_t half = samples / 2 + 1;
  const std::size_t nlin = std::max<std::size_t>(2, half / 2);
  const std::size_t nlog = std::max<std::size_t>(2, half - nlin);
  std::vector<double> nonneg;
  nonneg.reserve(nlin + nlog);
  for (std::size_t i = 0; i < nlin; ++i)
    nonneg.push_back(static_cast<double>(i) / static_cast<double>(nlin));
  const double L = std::log(omega_max);
  for (std::size_t i = 0; i < nlog; ++i)
    nonneg.push_back(std::exp(L * static_cast<double>(i) / static_cast<double>(nlog - 1)));
  std::vector<double> grid;
  grid.reserve(2 * nonneg.size());
  for (auto it = nonneg.rbegin(); it != nonneg.rend(); ++it)
    if (*it != 0.0) grid.push_back(-*it);
  for (double v : nonneg) grid.push_back(v);
  return grid;
}

/// min over the grid of Re[num(j*omega)/den(j*omega)], by direct complex
/// arithmetic. Throws if the denominator effectively vanishes at a sample.
inline GridReport grid_min_real_part(const Poly& num, const Poly& den, double omega_max,
                                     std::size_t samples) {
  if (num.is_zero() || den.is_zero())
    throw std::invalid_argument("grid_min_real_part: zero polynomial");
  const auto grid = hybrid_omega_grid(omega_max, samples);
  GridReport rep;
  rep.samples = grid.size();
  rep.lo = grid.front();
  rep.hi = grid.back();
  rep.min_value = std::numeric_limits<double>::infinity();
  for (double w : grid) {
    const std::complex<double> dv = eval_at_jomega(den, w);
    const double dscale = den.eval_abs(std::abs(w));
    if (std::abs(dv) <= 1e-12 * dscale)
      throw std::domain_error("grid_min_real_part: denominator has a pole on the sampled axis");
    const std::complex<double> nv = eval_at_jomega(num, w);
    const double re = (nv * std::conj(dv)).real() / std::norm(dv);
    if (re < rep.min_value) {
      rep.min_value = re;
      rep.argmin = w;
    }
  }
  return rep;
}

struct LambdaGridReport {
  double max_real_part = -std::numeric_limits<double>::infinity();
  double at_lambda = 0.0;
};

/// Sweeps lambda over a uniform grid and reports the supremum of root real
/// parts of lambda*b + (1-lambda)*a, via the simultaneous root iteration
/// (warm-started along the sweep). Root-finder failures propagate.
inline LambdaGridReport lambda_grid_roots(const SegmentFamily& fam, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("lambda_grid_roots: samples >= 2 required");
  LambdaGridReport rep;
  std::vector<std::complex<double>> warm;
  for (std::size_t i = 0; i < samples; ++i) {
    const double lam = static_cast<double>(i) / static_cast<double>(samples - 1);
    const Poly p = segment_member(fam, lam);
    const auto roots = complex_roots(p, warm.empty() ? nullptr : &warm);
    warm = roots;
    for (const auto& r : roots) {
      if (r.real() > rep.max_real_part) {
        rep.max_real_part = r.real();
        rep.at_lambda = lam;
      }
    }
  }
  return rep;
}

/// Exhaustive box scan for a point with both real-part numerators positive on
/// (0, inf). Only sensible for n <= 4 (x has at most 3 coordinates).
inline std::optional<std::vector<double>> brute_force_feasible_x(
    const SegmentFamily& fam, const std::vector<std::pair<double, double>>& box,
    std::size_t resolution, const Tolerances& tol = {}) {
  const int n = fam.a.degree();
  if (n > 4) throw std::invalid_argument("brute_force_feasible_x: n <= 4 only");
  const std::size_t dim = static_cast<std::size_t>(n - 1);
  if (box.size() != dim) throw std::invalid_argument("brute_force_feasible_x: box/dimension mismatch");
  if (resolution < 2) return std::nullopt;
  for (const auto& [lo, hi] : box)
    if (!(lo < hi)) return std::nullopt;

  std::vector<std::size_t> idx(dim, 0);
  std::vector<double> x(dim, 0.0);
  const auto feasible = [&](const std::vector<double>& pt) {
    const Poly ga = cl_coefficients(fam.a, pt).reconstruct();
    const Poly gb = cl_coefficients(fam.b, pt).reconstruct();
    if (ga.is_zero() || gb.is_zero()) return false;
    return positive_on_halfline(ga, false, tol).verdict &&
           positive_on_halfline(gb, false, tol).verdict;
  };
  while (true) {
    for (std::size_t d = 0; d < dim; ++d) {
      const auto& [lo, hi] = box[d];
      x[d] = lo + (hi - lo) * static_cast<double>(idx[d]) / static_cast<double>(resolution - 1);
    }
    if (feasible(x)) return x;
    std::size_t d = 0;
    while (d < dim && ++idx[d] == resolution) idx[d++] = 0;
    if (d == dim) break;
  }
  return std::nullopt;
}

}  // namespace sprforge::oracles
