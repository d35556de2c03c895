#pragma once

#include <optional>
#include <vector>

#include "numgroup/rational.hpp"

namespace numgroup::detail {

using QMat = std::vector<std::vector<Rational>>;
using QVec = std::vector<Rational>;

/// Exact inverse by Gauss-Jordan with first-nonzero pivot; nullopt when
/// singular.
inline std::optional<QMat> qmat_inverse(QMat a) {
  const size_t n = a.size();
  QMat inv(n, QVec(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline QVec qmat_apply(const QMat& m, const QVec& v) {
  QVec out(m.size(), Rational(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline Rational qmat_det(QMat a) {
  const size_t n = a.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

/// Solves x * rows = target for x (rows as a spanning list of row vectors);
/// nullopt when inconsistent. Rows need not be square.
inline std::optional<QVec> qmat_solve_left(const QMat& rows, const QVec& target) {
  const size_t m = rows.size();
  if (m == 0) return std::nullopt;
  const size_t w = rows[0].size();
  // Augmented transpose system: columns are unknown coefficients.
  QMat aug(w, QVec(m + 1, Rational(0)));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < w; ++j) aug[j][i] = rows[i][j];
  for (size_t j = 0; j < w; ++j) aug[j][m] = target[j];
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < m && row < w; ++col) {
    size_t piv = row;
    while (piv < w && aug[piv][col] == 0) ++piv;
    if (piv == w) continue;
    std::swap(aug[piv], aug[row]);
    Rational d = aug[row][col];
    for (size_t j = col; j <= m; ++j) aug[row][j] /= d;
    for (size_t r = 0; r < w; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      Rational f = aug[r][col];
      for (size_t j = col; j <= m; ++j) aug[r][j] -= f * aug[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t r = row; r < w; ++r)
    if (aug[r][m] != 0) return std::nullopt;
  QVec x(m, Rational(0));
  for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = aug[r][m];
  return x;
}

}  // namespace numgroup::detail
