#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sprforge/poly.hpp"
#include "sprforge/tolerances.hpp"

namespace sprforge {

struct RootFindingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sign of p(x) with a relative threshold. Values inside the threshold are
/// re-evaluated in extended precision before a zero is declared.
inline int sign_at(const Poly& p, double x, double tol_rel = Tolerances{}.sign) {
  if (p.is_zero()) return 0;
  const double v = p.eval(x);
  const double scale = p.eval_abs(std::abs(x));
  if (std::abs(v) > tol_rel * scale) return v > 0 ? 1 : -1;
  const long double vl = p.eval_ld(static_cast<long double>(x));
  if (std::abs(static_cast<double>(vl)) > 1e-17 * scale) return vl > 0 ? 1 : -1;
  return 0;
}

/// Signed-remainder chain p, p', -rem(...), each element rescaled to unit
/// max-norm (a positive factor, so the sign pattern is unchanged). The chain
/// stops when the remainder is negligible relative to its producers, i.e. at
/// the (numeric) gcd.
inline std::vector<Poly> sturm_chain(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  auto unit = [](const Poly& q) {
    double m = q.max_abs_coeff();
    return m == 0.0 ? q : scale(q, 1.0 / m);
  };
  std::vector<Poly> chain;
  chain.push_back(unit(p));
  if (p.degree() == 0) return chain;
  chain.push_back(unit(derivative(chain[0])));
  while (chain.back().degree() >= 1) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    Poly r = divmod(a, b).second;
    if (r.is_zero() || r.max_abs_coeff() <= 1e-12) break;
    chain.push_back(unit(-r));
  }
  return chain;
}

inline int sign_changes(const std::vector<Poly>& chain, double x,
                        double tol_rel = Tolerances{}.sign) {
  int changes = 0;
  int prev = 0;
  for (const Poly& q : chain) {
    int s = sign_at(q, x, tol_rel);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

/// Distinct real roots of the chain's polynomial in the half-open interval
/// (lo, hi], by Sturm's theorem.
inline int count_distinct_roots(const std::vector<Poly>& chain, double lo, double hi,
                                double tol_rel = Tolerances{}.sign) {
  return sign_changes(chain, lo, tol_rel) - sign_changes(chain, hi, tol_rel);
}

/// Sorted representatives of the distinct real roots of p in (lo, hi].
/// Root clusters tighter than the refinement width collapse to one value.
inline std::vector<double> isolate_real_roots(const Poly& p, double lo, double hi) {
  std::vector<double> out;
  if (p.is_zero() || p.degree() == 0 || !(lo < hi)) return out;
  const auto chain = sturm_chain(p);
  struct Seg {
    double lo, hi;
    int vlo, vhi;
  };
  const auto vat = [&](double x) { return sign_changes(chain, x); };
  std::vector<Seg> stack{{lo, hi, vat(lo), vat(hi)}};
  const auto width_done = [](double a, double b) {
    return (b - a) <= 1e-13 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
  };
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    int cnt = s.vlo - s.vhi;
    if (cnt <= 0) continue;
    if (cnt == 1 || width_done(s.lo, s.hi)) {
      double a = s.lo, b = s.hi;
      int va = s.vlo;
      while (!width_done(a, b)) {
        double mid = 0.5 * (a + b);
        int vm = vat(mid);
        if (va - vm >= 1) {
          b = mid;
        } else {
          a = mid;
          va = vm;
        }
      }
      out.push_back(0.5 * (a + b));
      continue;
    }
    double mid = 0.5 * (s.lo + s.hi);
    if (sign_at(chain[0], mid) == 0) mid += (s.hi - s.lo) * 1.91e-7;  // step off the root
    int vm = vat(mid);
    stack.push_back({mid, s.hi, vm, s.vhi});
    stack.push_back({s.lo, mid, s.vlo, vm});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Sturm-certified proof record for strict positivity of `target` on a
/// half-line. Enough data is retained (chain, endpoint sign counts) for an
/// independent checker to redo the count.
struct PositivityProof {
  Poly target;
  bool strict_at_zero = true;  ///< domain [0, inf) when true, (0, inf) otherwise
  std::vector<Poly> sturm_chain;
  int sign_changes_at_zero = 0;
  int sign_changes_at_bound = 0;
  double bound = 0.0;  ///< Cauchy bound the count was taken against
  bool verdict = false;
  std::optional<double> witness;  ///< a point with target(t) <= 0, when verdict is false
};

/// Decides g(t) > 0 on [0, inf) (strict_at_zero) or (0, inf).
inline PositivityProof positive_on_halfline(const Poly& g, bool strict_at_zero,
                                            const Tolerances& tol = {}) {
  if (g.is_zero()) throw std::invalid_argument("positive_on_halfline: zero polynomial");
  PositivityProof proof;
  proof.target = g;
  proof.strict_at_zero = strict_at_zero;

  // Factor out t^k so the Sturm count can start exactly at zero.
  std::vector<double> c = g.coeffs();
  std::size_t k = 0;
  const double m = g.max_abs_coeff();
  while (k < c.size() && std::abs(c[c.size() - 1 - k]) <= tol.strip * m) ++k;
  Poly core(std::vector<double>(c.begin(), c.end() - static_cast<std::ptrdiff_t>(k)));

  if (strict_at_zero && k > 0) {
    proof.verdict = false;
    proof.witness = 0.0;
    return proof;
  }
  if (core.degree() == 0) {
    proof.verdict = core.leading() > 0;
    if (!proof.verdict) proof.witness = strict_at_zero ? 0.0 : 1.0;
    return proof;
  }

  const double R = cauchy_root_bound(core) * (1.0 + 1e-9);
  proof.bound = R;
  proof.sturm_chain = sturm_chain(core);
  proof.sign_changes_at_zero = sign_changes(proof.sturm_chain, 0.0, tol.sign);
  proof.sign_changes_at_bound = sign_changes(proof.sturm_chain, R, tol.sign);
  const int roots = proof.sign_changes_at_zero - proof.sign_changes_at_bound;
  const int s0 = sign_at(core, 0.0, tol.sign);

  if (roots == 0 && s0 > 0) {
    proof.verdict = true;
    return proof;
  }
  proof.verdict = false;
  const auto rts = isolate_real_roots(core, 0.0, R);
  if (s0 > 0) {
    // Positive at the origin, so the first root is where g stops being positive.
    proof.witness = rts.empty() ? R : rts.front();
  } else if (s0 < 0) {
    // g < 0 on (0, first root); pick an interior point of that span.
    proof.witness = rts.empty() ? std::min(1.0, 0.5 * R) : 0.5 * rts.front();
  } else {
    // Sign undecidable at 0 even after escalation: report the origin's edge.
    proof.witness = strict_at_zero ? 0.0 : R * 1e-15;
  }
  return proof;
}

/// Strict positivity of g on the closed interval [lo, hi].
inline bool positive_on_interval(const Poly& g, double lo, double hi,
                                 const Tolerances& tol = {}) {
  if (g.is_zero()) return false;
  if (sign_at(g, lo, tol.sign) <= 0 || sign_at(g, hi, tol.sign) <= 0) return false;
  if (g.degree() == 0) return true;
  const auto chain = sturm_chain(g);
  return count_distinct_roots(chain, lo, hi, tol.sign) == 0;
}

/// Certified minimum of p over [lo, hi]: evaluated at the endpoints and at
/// every stationary point located by derivative-root isolation.
inline std::pair<double, double> min_on_interval(const Poly& p, double lo, double hi) {
  double best = p.eval(lo), arg = lo;
  const double vhi = p.eval(hi);
  if (vhi < best) best = vhi, arg = hi;
  const Poly dp = derivative(p);
  if (!dp.is_zero() && dp.degree() >= 1) {
    for (double r : isolate_real_roots(dp, lo, hi)) {
      const double v = p.eval(r);
      if (v < best) best = v, arg = r;
    }
  }
  return {best, arg};
}

inline std::pair<double, double> max_on_interval(const Poly& p, double lo, double hi) {
  auto [mn, arg] = min_on_interval(-p, lo, hi);
  return {-mn, arg};
}

inline double max_abs_on_interval(const Poly& p, double lo, double hi) {
  auto [mn, a1] = min_on_interval(p, lo, hi);
  auto [mx, a2] = max_on_interval(p, lo, hi);
  return std::max(std::abs(mn), std::abs(mx));
}

/// All complex roots by the Aberth-Ehrlich simultaneous iteration.
/// Optional warm start (same length as the degree) accelerates homotopy-style
/// sweeps. Throws RootFindingError when residuals fail to converge.
inline std::vector<std::complex<double>> complex_roots(
    const Poly& p, const std::vector<std::complex<double>>* warm = nullptr,
    int max_iter = 500) {
  using C = std::complex<double>;
  if (p.is_zero()) throw std::invalid_argument("complex_roots: zero polynomial");
  // Strip roots at the origin first.
  std::vector<double> c = p.coeffs();
  std::size_t ztail = 0;
  const double m = p.max_abs_coeff();
  while (ztail < c.size() - 1 && std::abs(c[c.size() - 1 - ztail]) <= 1e-300 * m) ++ztail;
  Poly q(std::vector<double>(c.begin(), c.end() - static_cast<std::ptrdiff_t>(ztail)));
  const int d = q.degree();
  std::vector<C> z;
  if (d >= 1) {
    const double R = cauchy_root_bound(q);
    z.resize(static_cast<std::size_t>(d));
    if (warm && warm->size() == z.size()) {
      z = *warm;
    } else {
      for (int i = 0; i < d; ++i) {
        double ang = 2.0 * M_PI * (i + 0.25) / d + 0.5;  // skewed to avoid symmetry locks
        z[static_cast<std::size_t>(i)] = std::polar(0.7 * R, ang);
      }
    }
    const Poly dq = derivative(q);
    bool done = false;
    for (int it = 0; it < max_iter && !done; ++it) {
      done = true;
      for (std::size_t i = 0; i < z.size(); ++i) {
        const C pv = q.eval(z[i]);
        const double scl = q.eval_abs(std::abs(z[i]));
        if (std::abs(pv) <= 1e-13 * scl) continue;
        done = false;
        const C dv = dq.eval(z[i]);
        C newton = (std::abs(dv) > 0) ? pv / dv : C(1e-3, 1e-3);
        C s = 0.0;
        for (std::size_t j = 0; j < z.size(); ++j) {
          if (j == i) continue;
          C diff = z[i] - z[j];
          if (std::abs(diff) < 1e-300) diff = C(1e-12, 1e-12);
          s += 1.0 / diff;
        }
        const C denom = 1.0 - newton * s;
        const C w = (std::abs(denom) > 1e-300) ? newton / denom : newton;
        z[i] -= w;
      }
    }
    for (const C& r : z) {
      const double scl = q.eval_abs(std::abs(r));
      if (std::abs(q.eval(r)) > 1e-8 * scl)
        throw RootFindingError("complex_roots: Aberth iteration did not converge");
    }
  }
  for (std::size_t i = 0; i < ztail; ++i) z.push_back(C(0.0, 0.0));
  return z;
}

}  // namespace sprforge
