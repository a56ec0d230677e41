#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sprforge/poly.hpp"
#include "sprforge/tolerances.hpp"

namespace sprforge {

/// Routh array verdict. The table is kept as the stability certificate; a
/// zero first-column pivot is resolved with the epsilon-row substitution so
/// the remaining rows can still be produced, but any such degeneracy already
/// settles the verdict as "not Hurwitz" (strict stability only).
struct RouthResult {
  bool hurwitz = false;
  std::vector<std::vector<double>> table;
  std::optional<std::size_t> failure_row;
};

inline RouthResult routh_hurwitz(const Poly& p_in, const Tolerances& tol = {}) {
  if (p_in.is_zero()) throw std::invalid_argument("routh_hurwitz: zero polynomial");
  if (p_in.degree() < 1) throw std::invalid_argument("routh_hurwitz: degree must be >= 1");
  const Poly p = p_in.leading() > 0 ? p_in : -p_in;
  const int n = p.degree();
  const std::size_t cols = static_cast<std::size_t>(n) / 2 + 1;

  RouthResult res;
  res.table.assign(static_cast<std::size_t>(n) + 1, std::vector<double>(cols, 0.0));
  for (int k = 0; k <= n; k += 2) res.table[0][static_cast<std::size_t>(k / 2)] = p[static_cast<std::size_t>(k)];
  for (int k = 1; k <= n; k += 2) res.table[1][static_cast<std::size_t>(k / 2)] = p[static_cast<std::size_t>(k)];

  res.hurwitz = true;
  const double scale0 = p.max_abs_coeff();
  for (std::size_t i = 2; i <= static_cast<std::size_t>(n); ++i) {
    auto& prev = res.table[i - 1];
    auto& prev2 = res.table[i - 2];
    double rowmax = 0.0;
    for (double v : prev) rowmax = std::max(rowmax, std::abs(v));
    double pivot = prev[0];
    if (rowmax <= 1e-14 * scale0) {
      // All-zero row: even/odd factor with axis-symmetric roots. Strictly
      // not Hurwitz; stop elaborating.
      res.hurwitz = false;
      if (!res.failure_row) res.failure_row = i - 1;
      break;
    }
    if (std::abs(pivot) <= 1e-12 * rowmax) {
      res.hurwitz = false;
      if (!res.failure_row) res.failure_row = i - 1;
      pivot = 1e-12 * rowmax;  // epsilon substitution to finish the table
    }
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      res.table[i][j] = (pivot * prev2[j + 1] - prev2[0] * prev[j + 1]) / pivot;
    }
  }
  if (res.hurwitz) {
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
      if (!(res.table[i][0] > 0.0)) {
        res.hurwitz = false;
        res.failure_row = i;
        break;
      }
    }
  }
  (void)tol;
  return res;
}

inline bool is_hurwitz(const Poly& p, const Tolerances& tol = {}) {
  return routh_hurwitz(p, tol).hurwitz;
}

}  // namespace sprforge
