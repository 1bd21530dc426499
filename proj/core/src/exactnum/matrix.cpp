#include "charvar/exactnum/matrix.hpp"

#include <utility>

#include "charvar/errors.hpp"

namespace charvar {

namespace {

// Reduces A (and the optional right-hand side) to row echelon form in place.
// Returns the pivot column of each pivot row.
std::vector<std::size_t> echelon(Matrix& A, std::vector<Scalar>* b, Scalar* det_sign) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
    std::size_t p = row;
    while (p < A.rows() && A(p, col).is_zero()) ++p;
    if (p == A.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(p, j), A(row, j));
      if (b) std::swap((*b)[p], (*b)[row]);
      if (det_sign) *det_sign = -*det_sign;
    }
    Scalar inv = A(row, col).inverse();
    for (std::size_t i = row + 1; i < A.rows(); ++i) {
      if (A(i, col).is_zero()) continue;
      Scalar f = A(i, col) * inv;
      for (std::size_t j = col; j < A.cols(); ++j) {
        if (!A(row, j).is_zero()) A(i, j) -= f * A(row, j);
      }
      if (b) (*b)[i] -= f * (*b)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(echelon(m, nullptr, nullptr).size());
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw ShapeError("determinant of a non-square matrix");
  Matrix m = *this;
  Scalar sign(1);
  auto piv = echelon(m, nullptr, &sign);
  if (piv.size() < rows_) return Scalar(0);
  Scalar d = sign;
  for (std::size_t i = 0; i < rows_; ++i) d *= m(i, i);
  return d;
}

std::optional<std::vector<Scalar>> solve_linear(Matrix A, std::vector<Scalar> b) {
  if (b.size() != A.rows()) throw ShapeError("solve_linear: right-hand side length mismatch");
  auto piv = echelon(A, &b, nullptr);
  for (std::size_t i = piv.size(); i < A.rows(); ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  std::vector<Scalar> x(A.cols());
  for (std::size_t k = piv.size(); k-- > 0;) {
    std::size_t c = piv[k];
    Scalar s = b[k];
    for (std::size_t j = c + 1; j < A.cols(); ++j) {
      if (!A(k, j).is_zero() && !x[j].is_zero()) s -= A(k, j) * x[j];
    }
    x[c] = s / A(k, c);
  }
  return x;
}

}  // namespace charvar
