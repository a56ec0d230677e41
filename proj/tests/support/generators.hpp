#pragma once

// Seeded random fixtures shared by the unit suites and the acceptance run.

#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "sprforge/oracles.hpp"
#include "sprforge/poly.hpp"
#include "sprforge/routh.hpp"
#include "sprforge/segment.hpp"

namespace gen {

using sprforge::Poly;
using sprforge::SegmentFamily;

inline Poly random_poly(std::mt19937_64& rng, int degree, double lo = -10.0, double hi = 10.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (double& v : c) v = dist(rng);
  if (std::abs(c[0]) < 0.05) c[0] = c[0] < 0 ? -0.5 : 0.5;
  return Poly(std::move(c));
}

/// Monic polynomial assembled from random roots with negative real parts in
/// [-rmax, -rmin]; complex pairs carry imaginary parts up to imax.
inline Poly random_hurwitz(std::mt19937_64& rng, int n, double rmin = 0.15, double rmax = 2.5,
                           double imax = 2.5) {
  std::uniform_real_distribution<double> re(rmin, rmax);
  std::uniform_real_distribution<double> im(0.1, imax);
  std::bernoulli_distribution coin(0.5);
  Poly p = Poly::constant(1.0);
  int left = n;
  while (left > 0) {
    if (left >= 2 && coin(rng)) {
      const double s = re(rng), w = im(rng);
      p = p * Poly({1.0, 2.0 * s, s * s + w * w});
      left -= 2;
    } else {
      p = p * Poly({1.0, re(rng)});
      left -= 1;
    }
  }
  return p;
}

/// Monic with roots drawn on both sides of the axis (for stability-test
/// corpora); real parts in [re_lo, re_hi].
inline Poly random_roots_poly(std::mt19937_64& rng, int n, double re_lo = -2.0, double re_hi = 2.0) {
  std::uniform_real_distribution<double> re(re_lo, re_hi);
  std::uniform_real_distribution<double> im(0.1, 2.0);
  std::bernoulli_distribution coin(0.5);
  Poly p = Poly::constant(1.0);
  int left = n;
  while (left > 0) {
    if (left >= 2 && coin(rng)) {
      const double s = -re(rng), w = im(rng);
      p = p * Poly({1.0, 2.0 * s, s * s + w * w});
      left -= 2;
    } else {
      p = p * Poly({1.0, -re(rng)});
      left -= 1;
    }
  }
  return p;
}

inline std::vector<double> random_x(std::mt19937_64& rng, std::size_t dim, double lo = -5.0,
                                    double hi = 5.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> x(dim);
  for (double& v : x) v = dist(rng);
  return x;
}

/// Segment-stable pair: endpoints drawn independently from the Hurwitz
/// generator, accepted only when the lambda-grid root oracle keeps the whole
/// segment strictly in the left half-plane.
inline SegmentFamily random_stable_segment(std::mt19937_64& rng, int n,
                                           std::size_t oracle_samples = 401,
                                           double margin = 1e-6) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    Poly a = random_hurwitz(rng, n);
    Poly b = random_hurwitz(rng, n);
    SegmentFamily fam(a, b);
    const auto rep = sprforge::oracles::lambda_grid_roots(fam, oracle_samples);
    if (rep.max_real_part < -margin) return fam;
  }
  throw std::runtime_error("random_stable_segment: generation budget exhausted");
}

/// Frozen regression fixture: Hurwitz endpoints whose midpoint is
/// (s^2+1)(s^2+s+1), so the segment member at lambda = 1/2 has roots at +-j.
inline SegmentFamily frozen_unstable_fixture() {
  return SegmentFamily(Poly({1.0, 1.0, 2.5, 1.25, 1.5}), Poly({1.0, 1.0, 1.5, 0.75, 0.5}));
}

/// Unstable-segment family of degree n >= 4: endpoints m +- delta*q around a
/// midpoint with an exact axis pair, q chosen orthogonal to the gradient of
/// the critical Hurwitz minor so both endpoints can stay stable.
inline std::optional<SegmentFamily> make_unstable_family(std::mt19937_64& rng, int n) {
  if (n < 4) return std::nullopt;
  std::uniform_real_distribution<double> wdist(0.5, 2.0);
  for (int attempt = 0; attempt < 200; ++attempt) {
    const double w0 = wdist(rng);
    Poly m = Poly({1.0, 0.0, w0 * w0}) * random_hurwitz(rng, n - 2);
    // Gradient (finite differences) of the critical minor at m.
    const auto minor_crit = [&](const Poly& p) {
      auto mp = sprforge::lambda_routh_positivity(SegmentFamily(p, p));
      return mp.minors[static_cast<std::size_t>(p.degree() - 2)].eval(0.0);
    };
    std::vector<double> grad(static_cast<std::size_t>(n));
    const double h = 1e-6 * std::max(1.0, m.max_abs_coeff());
    for (int i = 1; i <= n; ++i) {
      auto cu = m.coeffs();
      cu[static_cast<std::size_t>(i)] += h;
      auto cd = m.coeffs();
      cd[static_cast<std::size_t>(i)] -= h;
      grad[static_cast<std::size_t>(i - 1)] =
          (minor_crit(Poly(cu)) - minor_crit(Poly(cd))) / (2 * h);
    }
    double gnorm2 = 0.0;
    for (double g : grad) gnorm2 += g * g;
    if (gnorm2 == 0.0) continue;
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<double> q(static_cast<std::size_t>(n));
    for (double& v : q) v = nd(rng);
    double dot = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) dot += q[i] * grad[i];
    for (std::size_t i = 0; i < q.size(); ++i) q[i] -= dot / gnorm2 * grad[i];
    for (double delta : {0.3, 0.15, 0.05, 0.02}) {
      auto ca = m.coeffs();
      auto cb = m.coeffs();
      const double s = delta * std::max(1.0, m.max_abs_coeff());
      for (int i = 1; i <= n; ++i) {
        ca[static_cast<std::size_t>(i)] += s * q[static_cast<std::size_t>(i - 1)];
        cb[static_cast<std::size_t>(i)] -= s * q[static_cast<std::size_t>(i - 1)];
      }
      Poly a(ca), b(cb);
      if (a.degree() != n || b.degree() != n) continue;
      if (sprforge::is_hurwitz(a) && sprforge::is_hurwitz(b)) return SegmentFamily(a, b);
    }
  }
  return std::nullopt;
}

/// Degree-n unstable family built from the frozen degree-4 fixture: scaling
/// the frequency axis and multiplying both endpoints by one shared stable
/// factor preserves Hurwitz endpoints and the lambda = 1/2 axis crossing.
inline SegmentFamily lifted_unstable_family(std::mt19937_64& rng, int n) {
  if (n < 4) throw std::invalid_argument("lifted_unstable_family: n >= 4 required");
  SegmentFamily base = frozen_unstable_fixture();
  std::uniform_real_distribution<double> kdist(0.5, 2.0);
  const double kappa = kdist(rng);
  const auto rescale = [&](const Poly& p) {
    // p(s/kappa) * kappa^deg: monic, roots scaled by kappa.
    std::vector<double> c = p.coeffs();
    double f = 1.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] *= f;
      f *= kappa;
    }
    return Poly(std::move(c));
  };
  Poly a = rescale(base.a);
  Poly b = rescale(base.b);
  if (n > 4) {
    const Poly extra = random_hurwitz(rng, n - 4);
    a = a * extra;
    b = b * extra;
  }
  return SegmentFamily(a, b);
}

}  // namespace gen
