#include "gclab/matrix.hpp"

#include <cstddef>

#include "gclab/error.hpp"

namespace gclab {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "vector length does not match columns");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& keep) const {
  Matrix out(keep.size(), cols_);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(keep.at(i), c);
  return out;
}

namespace {

// Clears column `col` in every row except `pivot_row`, whose pivot is 1.
// Each row update touches only its own row, so rows are independent.
void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t col, Exec exec) {
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  const std::size_t cols = m.cols();
  const bool parallel = exec == Exec::parallel && m.rows() * (cols - col) >= 256;
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const auto row = static_cast<std::size_t>(r);
    if (row == pivot_row || is_zero(m(row, col))) continue;
    const Rational factor = m(row, col);
    for (std::size_t c = col; c < cols; ++c) {
      if (!is_zero(m(pivot_row, c))) m(row, c) -= factor * m(pivot_row, c);
    }
  }
}

}  // namespace

RowEchelon reduced_row_echelon(Matrix m, Exec exec) {
  RowEchelon out;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != next_row)
      for (std::size_t c = 0; c < m.cols(); ++c) swap(m(pivot, c), m(next_row, c));
    const Rational inv = 1 / m(next_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(next_row, c) *= inv;
    eliminate_column(m, next_row, col, exec);
    out.pivot_cols.push_back(col);
    ++next_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).pivot_cols.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RowEchelon ech = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) v[ech.pivot_cols[r]] = -ech.reduced(r, free);
    for (const auto& entry : v) {
      if (!is_zero(entry)) {
        const Rational lead = entry;
        for (auto& e : v) e /= lead;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::InvalidArgument, "right-hand side length does not match rows");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon ech = reduced_row_echelon(std::move(aug));
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) x[ech.pivot_cols[r]] = ech.reduced(r, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m, Exec exec) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return Matrix{};
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon ech = reduced_row_echelon(std::move(aug), exec);
  if (ech.pivot_cols.size() < n || ech.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  return inv;
}

}  // namespace gclab
