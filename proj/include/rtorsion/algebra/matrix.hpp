#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rtorsion/algebra/laurent.hpp"

namespace rtorsion::algebra {

/// Dense rectangular matrix of Laurent polynomials over a single domain.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(Domain d, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(Domain d, std::size_t n);
  /// Rows of scalars; throws DimensionError if rows are ragged.
  static ExactMatrix from_scalars(Domain d, const std::vector<std::vector<mpq_class>>& rows);

  const Domain& domain() const { return domain_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  LaurentPolynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPolynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  /// True when every entry is a constant.
  bool is_constant() const;

  ExactMatrix over(Domain d) const;
  ExactMatrix scaled(const LaurentPolynomial& s) const;

  /// Keeps the listed rows and columns, in the given order.
  ExactMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  /// Removes the listed rows and columns.
  ExactMatrix without(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  /// Writes `block` with its top-left corner at (row, col).
  void set_block(std::size_t row, std::size_t col, const ExactMatrix& block);

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  std::string to_string() const;

 private:
  Domain domain_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LaurentPolynomial> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination after clearing
/// negative exponents row by row. The result lives in the matrix's domain.
/// The 0x0 determinant is 1. Throws DimensionError for non-square input.
LaurentPolynomial determinant(const ExactMatrix& m);

/// Inverse of a constant matrix whose determinant is a unit of its domain.
ExactMatrix inverse_constant(const ExactMatrix& m);

}  // namespace rtorsion::algebra
