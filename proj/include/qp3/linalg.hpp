#pragma once

// Dense exact vectors and matrices for finite structure constants.

#include "qp3/errors.hpp"
#include "qp3/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace qp3 {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline void axpy(Vec& y, const Rational& a, const Vec& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

inline Vec operator+(Vec a, const Vec& b) {
  axpy(a, 1, b);
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  axpy(a, -1, b);
  return a;
}

inline Vec operator*(const Rational& s, Vec a) {
  for (auto& x : a) x *= s;
  return a;
}

inline Rational dot(const Vec& a, const Vec& b) {
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
  return r;
}

inline Mat zero_mat(std::size_t rows, std::size_t cols) { return Mat(rows, zero_vec(cols)); }

/// Rank by fraction-exact Gaussian elimination.
inline std::size_t rank(Mat m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Inverse of a square matrix; throws StructureError when singular.
inline Mat inverse(const Mat& a) {
  const std::size_t n = a.size();
  Mat m = a;
  Mat inv = zero_mat(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw StructureError("inverse: matrix not square");
    inv[i][i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw StructureError("inverse: singular matrix");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Rational p = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

inline Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t = zero_mat(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace qp3
