#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gclab/exec.hpp"
#include "gclab/rational.hpp"

namespace gclab {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  /// Rows listed in `keep`, in that order.
  Matrix select_rows(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;                       // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // one per nonzero row
};

/// Gauss-Jordan elimination. The pivot for each column is the first
/// remaining row with a nonzero entry there. With Exec::parallel the row
/// updates for each pivot are distributed over OpenMP threads; the result is
/// identical to the serial loop.
RowEchelon reduced_row_echelon(Matrix m, Exec exec = Exec::parallel);

std::size_t rank(const Matrix& m);

/// Basis of the right null space; each vector's first nonzero entry is 1.
std::vector<Vector> kernel_basis(const Matrix& m);

/// One exact solution of m x = b (free variables set to zero), or nothing
/// when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Inverse of a square nonsingular matrix, nothing otherwise.
std::optional<Matrix> inverse(const Matrix& m, Exec exec = Exec::parallel);

}  // namespace gclab
