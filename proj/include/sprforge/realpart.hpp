#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sprforge/poly.hpp"
#include "sprforge/roots.hpp"
#include "sprforge/routh.hpp"
#include "sprforge/tolerances.hpp"

namespace sprforge {

/// Internal fault: a structural property that must hold (given certified
/// inputs) failed numerically. Never swallowed.
struct ConsistencyAlarm : std::logic_error {
  using std::logic_error::logic_error;
};

/// The numerator coefficient vector x = (x_1 ... x_{n-1}) names the monic
/// polynomial s^{n-1} + x_1 s^{n-2} + ... + x_{n-1}.
inline Poly poly_from_x(std::span<const double> x) {
  std::vector<double> c;
  c.reserve(x.size() + 1);
  c.push_back(1.0);
  c.insert(c.end(), x.begin(), x.end());
  return Poly(std::move(c));
}

/// Coefficients (c_1 ... c_n) of the real-part numerator of c(s)/den(s) in
/// t = omega^2, by the closed-form alternating sum over the denominator
/// coefficients (conventions: a_0 = x_0 = 1, out-of-range indices are zero).
struct RealPartCoeffs {
  std::vector<double> values;       ///< c_1 ... c_n
  Poly denominator;
  std::vector<double> numerator_x;  ///< the x it was computed from

  /// g(t) = c_1 t^{n-1} + ... + c_n.
  Poly reconstruct() const { return Poly(values); }
};

inline RealPartCoeffs cl_coefficients(const Poly& den, std::span<const double> x) {
  if (den.is_zero() || den.degree() < 1)
    throw std::invalid_argument("cl_coefficients: denominator must have degree >= 1");
  if (!den.is_monic())
    throw std::invalid_argument("cl_coefficients: denominator must be monic");
  const int n = den.degree();
  if (static_cast<int>(x.size()) != n - 1)
    throw std::invalid_argument("cl_coefficients: x must have length n-1");
  const auto a = [&](int j) -> double {
    if (j < 0 || j > n) return 0.0;
    return den[static_cast<std::size_t>(j)];  // descending: a_j multiplies s^{n-j}
  };
  const auto xv = [&](int i) -> double {
    if (i == 0) return 1.0;
    if (i < 1 || i > n - 1) return 0.0;
    return x[static_cast<std::size_t>(i - 1)];
  };
  RealPartCoeffs out;
  out.denominator = den;
  out.numerator_x.assign(x.begin(), x.end());
  out.values.resize(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) {
    double acc = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double term = a(j) * xv(2 * l - j - 1);
      acc += ((l + j) % 2 == 0) ? term : -term;
    }
    out.values[static_cast<std::size_t>(l - 1)] = acc;
  }
  return out;
}

/// c_l as an affine functional of x: c_l(x) = w . x + r.
struct AffineFunctional {
  std::vector<double> w;
  double r = 0.0;

  double operator()(std::span<const double> x) const {
    double acc = r;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * x[i];
    return acc;
  }
};

inline AffineFunctional cl_affine(const Poly& den, int l) {
  const int n = den.degree();
  if (n < 1 || !den.is_monic()) throw std::invalid_argument("cl_affine: monic denominator required");
  if (l < 1 || l > n) throw std::invalid_argument("cl_affine: l out of range");
  AffineFunctional f;
  f.w.assign(static_cast<std::size_t>(n - 1), 0.0);
  for (int j = 0; j <= n; ++j) {
    const int i = 2 * l - j - 1;
    const double aj = den[static_cast<std::size_t>(j)];
    const double sgn = ((l + j) % 2 == 0) ? 1.0 : -1.0;
    if (i == 0)
      f.r += sgn * aj;
    else if (i >= 1 && i <= n - 1)
      f.w[static_cast<std::size_t>(i - 1)] += sgn * aj;
  }
  return f;
}

/// P(t) with P(omega^2) = Re[num(j*omega) * conj(den(j*omega))], via the
/// even/odd split: P = E_num*E_den + t*O_num*O_den.
inline Poly real_part_numerator(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("real_part_numerator: zero denominator");
  if (num.is_zero()) return Poly();
  if (num.degree() > den.degree())
    throw std::invalid_argument("real_part_numerator: deg(num) exceeds deg(den)");
  const Poly even = even_part_t(num) * even_part_t(den);
  const Poly odd = odd_part_t(num) * odd_part_t(den);
  return even + odd * Poly::monomial(1);
}

/// |den(j*omega)|^2 as a polynomial in t = omega^2.
inline Poly modulus_squared_t(const Poly& den) { return real_part_numerator(den, den); }

struct RePositivity {
  bool verdict = false;
  PositivityProof proof;
};

/// Condition (iii) alone: Re[num(j*omega)/den(j*omega)] > 0 for every real
/// omega. Requires a Hurwitz denominator (no axis poles) and a numerator of
/// degree n or n-1.
inline RePositivity re_positive(const Poly& num, const Poly& den, const Tolerances& tol = {}) {
  if (num.is_zero() || den.is_zero())
    throw std::invalid_argument("re_positive: zero polynomial");
  if (!routh_hurwitz(den, tol).hurwitz)
    throw std::domain_error("re_positive: denominator is not Hurwitz");
  const int n = den.degree();
  const int dn = num.degree();
  if (dn != n && dn != n - 1)
    throw std::invalid_argument("re_positive: numerator degree must be n or n-1");
  RePositivity out;
  out.proof = positive_on_halfline(real_part_numerator(num, den), /*strict_at_zero=*/true, tol);
  out.verdict = out.proof.verdict;
  return out;
}

enum class NumeratorClass { FullDegree, DegreeMinusOne };

/// Structural check: a numerator passing re_positive against a Hurwitz
/// denominator must itself be Hurwitz of degree n or n-1. Anything else is
/// an internal fault.
inline NumeratorClass check_property1(const Poly& num, const Poly& den, const Tolerances& tol = {}) {
  const RePositivity rp = re_positive(num, den, tol);
  if (!rp.verdict) throw std::invalid_argument("check_property1: re_positive precondition fails");
  const int n = den.degree();
  const int dn = num.degree();
  const auto hurwitz_or_positive_constant = [&](const Poly& p) {
    return p.degree() == 0 ? p.leading() > 0 : routh_hurwitz(p, tol).hurwitz;
  };
  if (dn == n && hurwitz_or_positive_constant(num)) return NumeratorClass::FullDegree;
  if (dn == n - 1 && hurwitz_or_positive_constant(num)) return NumeratorClass::DegreeMinusOne;
  throw ConsistencyAlarm("check_property1: numerator is in neither Hurwitz class");
}

/// Machine-checkable SPR certificate: equal degrees + denominator Routh
/// table + Sturm positivity of the real-part numerator (strict at t = 0 and,
/// through the root count against the Cauchy bound, as t -> infinity).
struct SprCertificate {
  bool spr = false;
  bool degree_match = false;
  RouthResult denominator_hurwitz;
  PositivityProof positivity;
  std::optional<NumeratorClass> numerator_class;
  bool consistency_alarm = false;
};

inline SprCertificate is_spr(const Poly& num, const Poly& den, const Tolerances& tol = {}) {
  if (num.is_zero() || den.is_zero()) throw std::invalid_argument("is_spr: zero polynomial");
  SprCertificate cert;
  cert.degree_match = num.degree() == den.degree() && num.degree() >= 0;
  if (den.degree() >= 1) cert.denominator_hurwitz = routh_hurwitz(den, tol);
  const bool den_ok = den.degree() >= 1 ? cert.denominator_hurwitz.hurwitz : den.leading() > 0;
  const Poly p = num.degree() <= den.degree() ? real_part_numerator(num, den)
                                              : real_part_numerator(den, num);
  if (!p.is_zero()) cert.positivity = positive_on_halfline(p, /*strict_at_zero=*/true, tol);
  cert.spr = cert.degree_match && den_ok && cert.positivity.verdict;
  if (cert.spr && num.degree() >= 1) {
    if (routh_hurwitz(num, tol).hurwitz)
      cert.numerator_class = NumeratorClass::FullDegree;
    else
      cert.consistency_alarm = true;  // SPR numerator of full degree must be Hurwitz
  }
  return cert;
}

}  // namespace sprforge
