#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sprforge/poly.hpp"
#include "sprforge/roots.hpp"
#include "sprforge/routh.hpp"
#include "sprforge/tolerances.hpp"

namespace sprforge {

/// The convex segment lambda*b + (1-lambda)*a of two monic polynomials of
/// the same degree.
struct SegmentFamily {
  Poly a;
  Poly b;

  SegmentFamily(Poly a_, Poly b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.is_zero() || b.is_zero())
      throw std::invalid_argument("SegmentFamily: zero endpoint");
    if (a.degree() != b.degree())
      throw std::invalid_argument("SegmentFamily: endpoint degrees differ");
    if (a.degree() < 1) throw std::invalid_argument("SegmentFamily: degree >= 1 required");
    if (!a.is_monic() || !b.is_monic())
      throw std::invalid_argument("SegmentFamily: endpoints must be monic");
  }
};

inline Poly segment_member(const SegmentFamily& fam, double lambda) {
  return fam.a + scale(fam.b - fam.a, lambda);
}

struct SegmentVerdict {
  bool stable = false;
  std::optional<double> witness_lambda;
  std::optional<std::complex<double>> witness_root;
  std::string method_trace;
};

namespace detail {

/// Newton polish of a candidate axis crossing: solve E(t,lambda) = 0,
/// O(t,lambda) = 0 where both are affine in lambda.
inline void polish_crossing(const Poly& Ea, const Poly& dE, const Poly& Oa, const Poly& dO,
                            double& t, double& lam) {
  for (int it = 0; it < 8; ++it) {
    const double e = Ea.eval(t) + lam * dE.eval(t);
    const double o = Oa.eval(t) + lam * dO.eval(t);
    const double et = derivative(Ea).eval(t) + lam * derivative(dE).eval(t);
    const double ot = derivative(Oa).eval(t) + lam * derivative(dO).eval(t);
    const double el = dE.eval(t);
    const double ol = dO.eval(t);
    const double det = et * ol - el * ot;
    if (std::abs(det) < 1e-300) return;
    const double dt = (-e * ol + o * el) / det;
    const double dl = (-o * et + e * ot) / det;
    t += dt;
    lam += dl;
    if (std::abs(dt) < 1e-15 * std::max(1.0, std::abs(t)) && std::abs(dl) < 1e-15) break;
  }
}

}  // namespace detail

/// Exact segment stability test. After the endpoint Routh checks, an axis
/// root of some member requires the even and odd parts (both affine in
/// lambda) to vanish simultaneously; eliminating lambda leaves the
/// polynomial W(t) = E_a*O_b - E_b*O_a in t = omega^2 whose nonnegative
/// roots are the only candidate crossings. Each candidate is mapped back to
/// lambda from both parts and accepted only when the two agree and land in
/// [0, 1]. The root-at-origin case is the affine sign check of the constant
/// term.
inline SegmentVerdict segment_hurwitz(const SegmentFamily& fam, const Tolerances& tol = {}) {
  SegmentVerdict out;

  const auto endpoint_witness = [&](const Poly& p, double lam) {
    out.stable = false;
    out.witness_lambda = lam;
    // Any closed-right-half-plane root serves as the witness.
    for (const auto& r : complex_roots(p)) {
      if (!out.witness_root || r.real() > out.witness_root->real()) out.witness_root = r;
    }
    out.method_trace = "endpoint-routh";
  };
  if (!routh_hurwitz(fam.a, tol).hurwitz) {
    endpoint_witness(fam.a, 0.0);
    return out;
  }
  if (!routh_hurwitz(fam.b, tol).hurwitz) {
    endpoint_witness(fam.b, 1.0);
    return out;
  }

  // Root at the origin: the constant term is affine in lambda and positive at
  // both endpoints (Hurwitz), so a sign change cannot occur; keep the check
  // for the certificate trail.
  const double ca = fam.a.coeff_of_power(0), cb = fam.b.coeff_of_power(0);
  if (ca <= 0 || cb <= 0 || (std::min(ca, cb) <= 0)) {
    out.stable = false;
    out.witness_lambda = ca <= 0 ? 0.0 : 1.0;
    out.witness_root = std::complex<double>(0.0, 0.0);
    out.method_trace = "origin-constant-term";
    return out;
  }

  const Poly Ea = even_part_t(fam.a), Eb = even_part_t(fam.b);
  const Poly Oa = odd_part_t(fam.a), Ob = odd_part_t(fam.b);
  const Poly dE = Eb - Ea, dO = Ob - Oa;
  const Poly W = Ea * Ob - Eb * Oa;

  const double wscale = std::max({W.is_zero() ? 0.0 : W.max_abs_coeff(), 1e-300});
  const double inscale = std::max(fam.a.max_abs_coeff(), fam.b.max_abs_coeff());
  if (W.is_zero() || wscale <= 1e-14 * inscale * inscale) {
    // Degenerate eliminant. For Hurwitz endpoints this forces a == b
    // (Hermite-Biehler interlacing makes E, O coprime), so the segment is the
    // stable constant family.
    out.stable = true;
    out.method_trace = "degenerate-eliminant-constant-family";
    return out;
  }

  struct Candidate {
    double t, lam;
  };
  std::vector<Candidate> cands;
  const double R = cauchy_root_bound(W) * (1 + 1e-9);
  for (double t : isolate_real_roots(W, 1e-14, R)) {
    // Back-solve lambda from each affine part that actually constrains it.
    const double de = dE.eval(t), dn = dO.eval(t);
    const double ea = Ea.eval(t), oa = Oa.eval(t);
    const double escale = std::max(std::abs(de), Ea.eval_abs(t) + dE.eval_abs(t));
    const double oscale = std::max(std::abs(dn), Oa.eval_abs(t) + dO.eval_abs(t));
    const bool e_free = std::abs(de) <= 1e-11 * escale;  // even part constant in lambda
    const bool o_free = std::abs(dn) <= 1e-11 * oscale;
    std::optional<double> le, lo;
    if (!e_free)
      le = -ea / de;
    else if (std::abs(ea) > 1e-9 * escale)
      continue;  // even part never vanishes here
    if (!o_free)
      lo = -oa / dn;
    else if (std::abs(oa) > 1e-9 * oscale)
      continue;
    double lam;
    if (le && lo) {
      if (std::abs(*le - *lo) > tol.lambda * std::max(1.0, std::max(std::abs(*le), std::abs(*lo))))
        continue;
      lam = 0.5 * (*le + *lo);
    } else if (le) {
      lam = *le;
    } else if (lo) {
      lam = *lo;
    } else {
      continue;  // both parts vanish identically in lambda: endpoints not Hurwitz
    }
    if (lam < -tol.lambda || lam > 1.0 + tol.lambda) continue;
    double tt = t, ll = std::clamp(lam, 0.0, 1.0);
    detail::polish_crossing(Ea, dE, Oa, dO, tt, ll);
    if (tt < 0 || ll < -tol.lambda || ll > 1.0 + tol.lambda) continue;
    cands.push_back({tt, std::clamp(ll, 0.0, 1.0)});
  }

  std::sort(cands.begin(), cands.end(), [](const Candidate& u, const Candidate& v) {
    return u.lam < v.lam;
  });
  for (const auto& c : cands) {
    const double omega = std::sqrt(std::max(0.0, c.t));
    const Poly alam = segment_member(fam, c.lam);
    const double resid = std::abs(alam.eval(std::complex<double>(0.0, omega)));
    const double rscale = alam.eval_abs(omega);
    if (resid <= tol.residual * rscale) {
      out.stable = false;
      out.witness_lambda = c.lam;
      out.witness_root = std::complex<double>(0.0, omega);
      out.method_trace = "boundary-crossing-elimination";
      return out;
    }
    // Tangential crossings can defeat the Newton polish (singular Jacobian).
    // A Routh check of the candidate member still settles those.
    if (!routh_hurwitz(alam, tol).hurwitz) {
      out.stable = false;
      out.witness_lambda = c.lam;
      const auto roots = complex_roots(alam);
      std::complex<double> best = roots.front();
      for (const auto& r : roots)
        if (r.real() > best.real()) best = r;
      out.witness_root = best;
      out.method_trace = "boundary-crossing-elimination+routh";
      return out;
    }
  }
  out.stable = true;
  out.method_trace = "boundary-crossing-elimination";
  return out;
}

/// Cross-check route: every leading principal minor of the Hurwitz matrix of
/// a_lambda, expanded as an explicit polynomial in lambda (entries are affine,
/// so minor m has degree <= m; the expansion is recovered exactly by
/// interpolation at Chebyshev nodes), certified positive on [0, 1] by Sturm.
struct MinorPositivity {
  bool stable = false;
  std::optional<std::size_t> failing_minor;  ///< 1-based index of the first failing minor
  std::vector<Poly> minors;                  ///< polynomials in lambda
};

namespace detail {

inline double det_inplace(std::vector<std::vector<double>>& m) {
  const std::size_t k = m.size();
  double det = 1.0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (m[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < k; ++r) {
      const double f = m[r][col] / m[col][col];
      for (std::size_t cc = col; cc < k; ++cc) m[r][cc] -= f * m[col][cc];
    }
  }
  return det;
}

/// Interpolating polynomial through (xs, ys) in Newton form, expanded to the
/// dense descending representation.
inline Poly interpolate(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t m = xs.size();
  std::vector<double> dd = ys;  // divided differences, in place
  for (std::size_t lev = 1; lev < m; ++lev)
    for (std::size_t i = m - 1; i >= lev; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lev]);
  Poly acc;
  for (std::size_t i = m; i-- > 0;) {
    acc = acc * Poly({1.0, -xs[i]}) + Poly::constant(dd[i]);
  }
  return acc;
}

}  // namespace detail

inline MinorPositivity lambda_routh_positivity(const SegmentFamily& fam, const Tolerances& tol = {}) {
  const int n = fam.a.degree();
  if (n > 12)
    throw std::invalid_argument(
        "lambda_routh_positivity: disabled for n > 12 (minor degree growth); "
        "use segment_hurwitz");
  MinorPositivity out;
  const auto hentry = [&](const Poly& p, int i, int j) -> double {
    const int k = 2 * j - i + 1;  // 0-based Hurwitz matrix indexing
    if (k < 0 || k > n) return 0.0;
    return p[static_cast<std::size_t>(k)];
  };
  out.stable = true;
  for (int m = 1; m <= n; ++m) {
    // Chebyshev nodes on [0,1], m+1 of them, exact for a degree-m expansion.
    std::vector<double> xs, ys;
    for (int q = 0; q <= m; ++q) {
      const double theta = M_PI * (2.0 * q + 1.0) / (2.0 * (m + 1));
      const double lam = 0.5 + 0.5 * std::cos(theta);
      const Poly p = segment_member(fam, lam);
      std::vector<std::vector<double>> mat(static_cast<std::size_t>(m),
                                           std::vector<double>(static_cast<std::size_t>(m)));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = hentry(p, i, j);
      xs.push_back(lam);
      ys.push_back(detail::det_inplace(mat));
    }
    Poly minor = detail::interpolate(xs, ys);
    out.minors.push_back(minor);
    if (out.stable && !positive_on_interval(minor, 0.0, 1.0, tol)) {
      out.stable = false;
      out.failing_minor = static_cast<std::size_t>(m);
    }
  }
  return out;
}

}  // namespace sprforge
