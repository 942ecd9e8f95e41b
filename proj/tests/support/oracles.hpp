#pragma once

// Reference computations used only by the tests. None of them share code
// paths with the engines they check.

#include <array>
#include <optional>
#include <vector>

#include "rtorsion/algebra/matrix.hpp"
#include "rtorsion/algebra/rational_function.hpp"

namespace rtorsion::testing {

using algebra::Domain;
using algebra::ExactMatrix;
using algebra::LaurentPolynomial;

/// Laplace expansion along the first row.
inline LaurentPolynomial cofactor_determinant(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPolynomial::one(m.domain());
  if (n == 1) return m(0, 0);
  LaurentPolynomial out(m.domain());
  for (std::size_t c = 0; c < n; ++c) {
    ExactMatrix minor(m.domain(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    LaurentPolynomial term = m(0, c) * cofactor_determinant(minor);
    if (c % 2) out -= term;
    else out += term;
  }
  return out;
}

using QMatrix = std::vector<std::vector<mpq_class>>;  // rows x cols, may be empty

inline QMatrix zeros(std::size_t r, std::size_t c) { return QMatrix(r, std::vector<mpq_class>(c, 0)); }

/// Row echelon form by Gaussian elimination over Q; returns the rank and
/// accumulates the determinant when the matrix is square.
inline std::size_t eliminate(QMatrix a, std::size_t cols, mpq_class* det = nullptr) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  mpq_class d = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) {
      d = 0;
      continue;
    }
    if (p != rank) {
      std::swap(a[p], a[rank]);
      d = -d;
    }
    d *= a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  if (det) *det = (rank == rows && rows == cols) ? d : mpq_class(0);
  return rank;
}

inline std::size_t rank_of(const QMatrix& a, std::size_t cols) { return eliminate(a, cols); }

inline mpq_class det_of(const QMatrix& a) {
  if (a.empty()) return 1;
  mpq_class d;
  eliminate(a, a.size(), &d);
  return d;
}

/// Columns `idx` of `b` (rows x cols) as a rows x |idx| matrix.
inline QMatrix columns(const QMatrix& b, std::size_t rows, const std::vector<std::size_t>& idx) {
  QMatrix out = zeros(rows, idx.size());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < idx.size(); ++k) out[r][k] = b[r][idx[k]];
  return out;
}

/// Torsion of an acyclic based complex C3 -> C2 -> C1 -> C0 over Q from the
/// definition: choose b_i whose boundaries span im ∂_i, then
/// τ = Π_i [∂b_{i+1} b_i / c_i]^{(-1)^{i+1}}. `b[i]` is the matrix of ∂_i
/// (n_{i-1} x n_i) for i = 1, 2, 3. Returns nullopt when not acyclic.
inline std::optional<mpq_class> chain_contraction_torsion(const std::array<std::size_t, 4>& n_by_degree,
                                                          const std::array<QMatrix, 4>& b) {
  auto n = [&](int i) -> std::size_t { return (i < 0 || i > 3) ? 0 : n_by_degree[static_cast<std::size_t>(i)]; };
  auto boundary_rank = [&](int i) -> std::size_t {
    if (i < 1 || i > 3) return 0;
    return rank_of(b[static_cast<std::size_t>(i)], n(i));
  };
  for (int i = 0; i <= 3; ++i)
    if (boundary_rank(i + 1) + boundary_rank(i) != n(i)) return std::nullopt;

  // Greedy choice of b_i: standard basis vectors whose boundaries are independent.
  std::array<std::vector<std::size_t>, 4> chosen;
  for (int i = 1; i <= 3; ++i) {
    const auto& bi = b[static_cast<std::size_t>(i)];
    std::vector<std::size_t>& sel = chosen[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < n(i); ++j) {
      auto trial = sel;
      trial.push_back(j);
      if (rank_of(columns(bi, n(i - 1), trial), trial.size()) == trial.size()) sel = trial;
    }
  }

  mpq_class tau = 1;
  for (int i = 0; i <= 3; ++i) {
    // Columns: ∂b_{i+1} followed by the chosen basis vectors of C_i.
    QMatrix m = zeros(n(i), n(i));
    std::size_t col = 0;
    if (i + 1 <= 3) {
      const auto& up = b[static_cast<std::size_t>(i + 1)];
      for (std::size_t j : chosen[static_cast<std::size_t>(i + 1)]) {
        for (std::size_t r = 0; r < n(i); ++r) m[r][col] = up[r][j];
        ++col;
      }
    }
    for (std::size_t j : chosen[static_cast<std::size_t>(i)]) {
      m[j][col] = 1;
      ++col;
    }
    mpq_class d = det_of(m);
    if (d == 0) return std::nullopt;
    if ((i + 1) % 2 == 0) tau *= d;
    else tau /= d;
  }
  return tau;
}

/// Value of a Laurent polynomial at a nonzero rational point.
inline mpq_class evaluate(const LaurentPolynomial& p, const mpq_class& q) {
  mpq_class out = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class pw = 1;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) pw *= q;
    out += e < 0 ? mpq_class(c / pw) : mpq_class(c * pw);
  }
  return out;
}

inline QMatrix evaluate(const ExactMatrix& m, const mpq_class& q) {
  QMatrix out = zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = evaluate(m(i, j), q);
  return out;
}

}  // namespace rtorsion::testing
