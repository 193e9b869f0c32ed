#include "tqft/ring/matrix.hpp"

namespace tqft::ring {

Matrix identity_matrix(const FieldPtr& f, size_t n) {
  Matrix m = zero_matrix(f, n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = CycNum(f, 1);
  return m;
}

Matrix zero_matrix(const FieldPtr& f, size_t rows, size_t cols) {
  return Matrix(rows, std::vector<CycNum>(cols, CycNum(f, 0)));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  const FieldPtr& f = a.at(0).at(0).field();
  Matrix out = zero_matrix(f, a.size(), b.empty() ? 0 : b[0].size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return m;
  Matrix t(m[0].size(), std::vector<CycNum>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Matrix adjoint(const Matrix& m) {
  Matrix t = transpose(m);
  for (auto& row : t)
    for (auto& x : row) x = x.conj();
  return t;
}

Matrix scaled(const Matrix& m, const CycNum& c) {
  Matrix out = m;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

CycNum determinant(Matrix m) {
  const size_t n = m.size();
  if (n == 0) return CycNum();
  const FieldPtr f = m[0][0].field();
  CycNum det(f, 1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return CycNum(f, 0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const CycNum inv = m[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const CycNum factor = m[r][c] * inv;
      for (size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m0) {
  const size_t n = m0.size();
  if (n == 0) return Matrix{};
  const FieldPtr f = m0[0][0].field();
  Matrix m = m0, inv = identity_matrix(f, n);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    const CycNum s = m[c][c].inverse();
    for (size_t k = 0; k < n; ++k) {
      m[c][k] *= s;
      inv[c][k] *= s;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const CycNum factor = m[r][c];
      for (size_t k = 0; k < n; ++k) {
        m[r][k] -= factor * m[c][k];
        inv[r][k] -= factor * inv[c][k];
      }
    }
  }
  return inv;
}

bool all_integral(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_integral()) return false;
  return true;
}

}  // namespace tqft::ring
