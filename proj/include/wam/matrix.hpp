#pragma once

#include <vector>

#include "wam/semiring.hpp"

namespace wam {

// Dense row-major matrix of scalars. Dimensions in this library stay small
// (a few hundred entries after tensor products), so there is no sparse path.
// Zero-by-zero and other degenerate shapes are legal; products with an empty
// inner dimension yield all-zero results.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> data;

  Matrix() = default;
  Matrix(int r, int c, const Scalar& fill) : rows(r), cols(c), data(size_t(r) * size_t(c), fill) {}

  Scalar& at(int i, int j) { return data[size_t(i) * cols + j]; }
  const Scalar& at(int i, int j) const { return data[size_t(i) * cols + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

Matrix mat_zero(const Semiring& sr, int rows, int cols);
Matrix mat_identity(const Semiring& sr, int n);
Matrix mat_add(const Semiring& sr, const Matrix& a, const Matrix& b);
Matrix mat_mul(const Semiring& sr, const Matrix& a, const Matrix& b);
Matrix mat_scale(const Semiring& sr, const Scalar& k, const Matrix& a);
Matrix mat_transpose(const Matrix& a);

// Kronecker product on the basis (i,j) ordered lexicographically, i major:
// entry ((i1,i2),(j1,j2)) = a(i1,j1) * b(i2,j2).
Matrix mat_kronecker(const Semiring& sr, const Matrix& a, const Matrix& b);

bool mat_is_zero(const Semiring& sr, const Matrix& a);

}  // namespace wam
