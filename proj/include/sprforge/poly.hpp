#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "sprforge/tolerances.hpp"

namespace sprforge {

/// Dense real-coefficient univariate polynomial in descending powers:
/// coeffs()[0] is the leading coefficient. The zero polynomial is stored as
/// the empty list and reports degree() == -1; stability and positivity
/// routines reject it.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<double> c) : c_(c) { strip_leading(Tolerances{}.strip); }
  explicit Poly(std::vector<double> c, double strip_tol = Tolerances{}.strip)
      : c_(std::move(c)) {
    strip_leading(strip_tol);
  }

  static Poly constant(double v) { return Poly({v}); }

  /// coeff * s^k
  static Poly monomial(int k, double coeff = 1.0) {
    if (coeff == 0.0) return Poly();
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
    c[0] = coeff;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coeffs() const { return c_; }

  /// Descending-power access: (*this)[0] is the leading coefficient.
  double operator[](std::size_t i) const { return c_.at(i); }

  double leading() const {
    if (is_zero()) throw std::invalid_argument("Poly: zero polynomial has no leading coefficient");
    return c_.front();
  }

  /// Coefficient of s^k; zero outside the stored range.
  double coeff_of_power(int k) const {
    const int d = degree();
    if (k < 0 || k > d) return 0.0;
    return c_[static_cast<std::size_t>(d - k)];
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  bool is_monic(double tol = 1e-9) const {
    return !is_zero() && std::abs(c_.front() - 1.0) <= tol;
  }

  double eval(double x) const {
    double acc = 0.0;
    for (double v : c_) acc = acc * x + v;
    return acc;
  }

  long double eval_ld(long double x) const {
    long double acc = 0.0L;
    for (double v : c_) acc = acc * x + v;
    return acc;
  }

  std::complex<double> eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (double v : c_) acc = acc * x + v;
    return acc;
  }

  /// Horner on |coeffs| and |x|: an upper bound for roundoff scaling of eval.
  double eval_abs(double absx) const {
    double acc = 0.0;
    for (double v : c_) acc = acc * absx + std::abs(v);
    return acc;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

 private:
  void strip_leading(double tol) {
    double m = max_abs_coeff();
    if (m == 0.0) {
      c_.clear();
      return;
    }
    std::size_t k = 0;
    while (k < c_.size() && std::abs(c_[k]) <= tol * m) ++k;
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
    if (c_.empty()) c_.clear();
  }

  std::vector<double> c_;
};

inline Poly operator+(const Poly& p, const Poly& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<double> out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[out.size() - a.size() + i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[out.size() - b.size() + i] += b[i];
  return Poly(std::move(out));
}

inline Poly operator-(const Poly& p) {
  std::vector<double> out = p.coeffs();
  for (double& v : out) v = -v;
  return Poly(std::move(out));
}

inline Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

inline Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return Poly(std::move(out));
}

inline Poly scale(const Poly& p, double k) {
  if (k == 0.0) return Poly();
  std::vector<double> out = p.coeffs();
  for (double& v : out) v *= k;
  return Poly(std::move(out));
}

inline Poly derivative(const Poly& p) {
  const int d = p.degree();
  if (d <= 0) return Poly();
  std::vector<double> out(static_cast<std::size_t>(d), 0.0);
  for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] * (d - i);
  return Poly(std::move(out));
}

/// p(alpha*s + beta), computed by Horner over the affine argument.
inline Poly compose_affine(const Poly& p, double alpha, double beta) {
  Poly arg({alpha, beta});
  Poly acc;
  for (double v : p.coeffs()) acc = acc * arg + Poly::constant(v);
  return acc;
}

inline Poly monic_normalized(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("monic_normalized: zero polynomial");
  return scale(p, 1.0 / p.leading());
}

/// Even part in t = omega^2: Re[p(j*omega)] = even_part_t(p)(omega^2).
inline Poly even_part_t(const Poly& p) {
  const int d = p.degree();
  if (d < 0) return Poly();
  std::vector<double> out;  // descending in t
  const int mmax = d / 2;
  out.resize(static_cast<std::size_t>(mmax) + 1, 0.0);
  for (int m = 0; m <= mmax; ++m) {
    double c = p.coeff_of_power(2 * m);
    out[static_cast<std::size_t>(mmax - m)] = ((m % 2) ? -c : c);
  }
  return Poly(std::move(out));
}

/// Odd part in t = omega^2: Im[p(j*omega)] = omega * odd_part_t(p)(omega^2).
inline Poly odd_part_t(const Poly& p) {
  const int d = p.degree();
  if (d < 1) return Poly();
  const int mmax = (d - 1) / 2;
  std::vector<double> out(static_cast<std::size_t>(mmax) + 1, 0.0);
  for (int m = 0; m <= mmax; ++m) {
    double c = p.coeff_of_power(2 * m + 1);
    out[static_cast<std::size_t>(mmax - m)] = ((m % 2) ? -c : c);
  }
  return Poly(std::move(out));
}

/// p(j*omega) assembled from the even/odd coefficient split, so that
/// eval_at_jomega(p, -w) is exactly the conjugate of eval_at_jomega(p, w).
inline std::complex<double> eval_at_jomega(const Poly& p, double omega) {
  if (p.is_zero()) return {0.0, 0.0};
  const double t = omega * omega;
  const double re = even_part_t(p).eval(t);
  const Poly o = odd_part_t(p);
  const double im = o.is_zero() ? 0.0 : omega * o.eval(t);
  return {re, im};
}

/// R = 1 + max|c_i / c_lead|: every (real or complex) root lies in |z| <= R.
inline double cauchy_root_bound(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
  const double lead = std::abs(p.leading());
  double m = 0.0;
  const auto& c = p.coeffs();
  for (std::size_t i = 1; i < c.size(); ++i) m = std::max(m, std::abs(c[i]));
  return 1.0 + m / lead;
}

/// Quotient/remainder of dense division; deg(rem) < deg(divisor).
inline std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  if (num.is_zero() || num.degree() < den.degree()) return {Poly(), num};
  std::vector<double> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t qn = rem.size() - d.size() + 1;
  std::vector<double> quot(qn, 0.0);
  for (std::size_t i = 0; i < qn; ++i) {
    double f = rem[i] / d[0];
    quot[i] = f;
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= f * d[j];
    rem[i] = 0.0;  // cancel exactly
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

}  // namespace sprforge
