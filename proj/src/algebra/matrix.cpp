#include "rtorsion/algebra/matrix.hpp"

#include <algorithm>

#include "rtorsion/errors.hpp"

namespace rtorsion::algebra {

ExactMatrix::ExactMatrix(Domain d, std::size_t rows, std::size_t cols)
    : domain_(d), rows_(rows), cols_(cols), data_(rows * cols, LaurentPolynomial(d)) {}

ExactMatrix ExactMatrix::identity(Domain d, std::size_t n) {
  ExactMatrix m(d, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPolynomial::one(d);
  return m;
}

ExactMatrix ExactMatrix::from_scalars(Domain d, const std::vector<std::vector<mpq_class>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(d, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = LaurentPolynomial::constant(d, rows[i][j]);
  }
  return m;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& x) { return x.is_zero(); });
}

bool ExactMatrix::is_constant() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& x) { return x.is_constant(); });
}

ExactMatrix ExactMatrix::over(Domain d) const {
  if (d == domain_) return *this;
  ExactMatrix out(d, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].over(d);
  return out;
}

ExactMatrix ExactMatrix::scaled(const LaurentPolynomial& s) const {
  ExactMatrix out = *this;
  for (auto& x : out.data_) x = x * s;
  return out;
}

ExactMatrix ExactMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  ExactMatrix out(domain_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

ExactMatrix ExactMatrix::without(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  auto keep = [](std::size_t n, std::span<const std::size_t> drop) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(i);
    return out;
  };
  auto r = keep(rows_, rows), c = keep(cols_, cols);
  return submatrix(r, c);
}

void ExactMatrix::set_block(std::size_t row, std::size_t col, const ExactMatrix& block) {
  if (row + block.rows_ > rows_ || col + block.cols_ > cols_) throw DimensionError("block does not fit");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(row + i, col + j) = block(i, j);
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
  ExactMatrix out(a.domain_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum dimension mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference dimension mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

std::string ExactMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

LaurentPolynomial determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const Domain original = m.domain();
  const Domain f = original.quotient_field();
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPolynomial::one(original);

  // Multiply each row by t^-low so all entries are ordinary polynomials.
  std::vector<LaurentPolynomial> a(n * n);
  long shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<long> low;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = m(i, j);
      if (!x.is_zero()) low = low ? std::min(*low, x.low_exponent()) : x.low_exponent();
    }
    if (!low) return LaurentPolynomial(original);
    shift += *low;
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).over(f).shifted(-*low);
  }
  auto at = [&](std::size_t i, std::size_t j) -> LaurentPolynomial& { return a[i * n + j]; };

  bool negate = false;
  LaurentPolynomial prev = LaurentPolynomial::one(f);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Pivot: nonzero entry of smallest degree keeps intermediate sizes down.
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (at(i, k).is_zero()) continue;
      if (pivot == n || *at(i, k).degree() < *at(pivot, k).degree()) pivot = i;
    }
    if (pivot == n) return LaurentPolynomial(original);
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)).exact_divide(prev);
      at(i, k) = LaurentPolynomial(f);
    }
    prev = at(k, k);
  }
  LaurentPolynomial det = at(n - 1, n - 1).shifted(shift);
  if (negate) det = -det;
  return det.over(original);
}

ExactMatrix inverse_constant(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  if (!m.is_constant()) throw InputError("inverse_constant needs constant entries");
  const Domain d = m.domain();
  const Domain f = d.quotient_field();
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n, mpq_class(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).coefficient(0);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw ValidationError("matrix " + m.to_string() + " is singular");
    std::swap(a[p], a[c]);
    mpq_class inv = f.inverse(a[c][c]);
    for (auto& x : a[c]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class factor = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] = f.sub(a[r][j], f.mul(factor, a[c][j]));
    }
  }
  std::vector<std::vector<mpq_class>> inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv[i].assign(a[i].begin() + static_cast<long>(n), a[i].end());
    for (const auto& x : inv[i])
      if (!d.contains(x)) throw ValidationError("matrix " + m.to_string() + " is not invertible over " + d.name());
  }
  return ExactMatrix::from_scalars(d, inv);
}

}  // namespace rtorsion::algebra
