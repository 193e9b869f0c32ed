#pragma once

#include <optional>
#include <vector>

#include "tqft/ring/cyclotomic.hpp"

namespace tqft::ring {

using Matrix = std::vector<std::vector<CycNum>>;

Matrix identity_matrix(const FieldPtr& f, size_t n);
Matrix zero_matrix(const FieldPtr& f, size_t rows, size_t cols);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
/// Entrywise conjugate of the transpose.
Matrix adjoint(const Matrix& m);
Matrix scaled(const Matrix& m, const CycNum& c);
/// Fraction-field Gaussian elimination.
CycNum determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
bool all_integral(const Matrix& m);

}  // namespace tqft::ring
