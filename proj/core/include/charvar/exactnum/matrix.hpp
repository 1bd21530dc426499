#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "charvar/exactnum/scalar.hpp"

namespace charvar {

/// Dense row-major matrix over a Scalar field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  /// Rank by Gaussian elimination over the field.
  int rank() const;
  Scalar determinant() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

/// Solves A·x = b exactly. Returns nullopt when the system is inconsistent;
/// free variables (if any) are set to zero.
std::optional<std::vector<Scalar>> solve_linear(Matrix A, std::vector<Scalar> b);

}  // namespace charvar
