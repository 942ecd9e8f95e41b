#include "rtorsion/torsion/turaev.hpp"

#include <algorithm>

#include "rtorsion/errors.hpp"

namespace rtorsion::torsion {

using algebra::LaurentPolynomial;

namespace {

void check_shape(const ExactMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols)
    throw DimensionError(std::string(name) + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
}

void check_composition(const ExactMatrix& lhs, const ExactMatrix& rhs, const char* name) {
  ExactMatrix p = lhs * rhs;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (!p(i, j).is_zero())
        throw InputError(std::string(name) + " is not zero: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") = " + p(i, j).to_string());
}

bool is_valid_subset(const std::vector<std::size_t>& s, std::size_t bound) {
  std::vector<std::size_t> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
         std::all_of(sorted.begin(), sorted.end(), [&](std::size_t i) { return i < bound; });
}

// Advances `s` to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& s, std::size_t n) {
  const std::size_t k = s.size();
  for (std::size_t i = k; i-- > 0;) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  return s;
}

}  // namespace

BasedChainComplex::BasedChainComplex(std::array<std::size_t, 4> dims, ExactMatrix b3, ExactMatrix b2, ExactMatrix b1)
    : dims_(dims), b3_(std::move(b3)), b2_(std::move(b2)), b1_(std::move(b1)) {
  const auto [n3, n2, n1, n0] = dims_;
  check_shape(b3_, n2, n3, "B3");
  check_shape(b2_, n1, n2, "B2");
  check_shape(b1_, n0, n1, "B1");
  if (!(b3_.domain() == b2_.domain()) || !(b2_.domain() == b1_.domain()))
    throw InputError("boundary matrices live over different domains");
  check_composition(b2_, b3_, "B2*B3");
  check_composition(b1_, b2_, "B1*B2");
}

TuraevResult turaev_torsion(const BasedChainComplex& c, const Selection& sel) {
  const std::size_t n3 = c.dim(3), n2 = c.dim(2), n1 = c.dim(1), n0 = c.dim(0);
  if (sel.rows3.size() != n3 || !is_valid_subset(sel.rows3, n2))
    throw DimensionError("rows3 must be " + std::to_string(n3) + " distinct row indices of B3 below " +
                         std::to_string(n2));
  if (sel.cols1.size() != n0 || !is_valid_subset(sel.cols1, n1))
    throw DimensionError("cols1 must be " + std::to_string(n0) + " distinct column indices of B1 below " +
                         std::to_string(n1));
  if (n2 - n3 != n1 - n0 || n2 < n3 || n1 < n0)
    throw DimensionError("selection cannot make A2 square: n2 - n3 = " + std::to_string(long(n2) - long(n3)) +
                         " but n1 - n0 = " + std::to_string(long(n1) - long(n0)));

  std::vector<std::size_t> all3(n3), all0(n0);
  for (std::size_t i = 0; i < n3; ++i) all3[i] = i;
  for (std::size_t i = 0; i < n0; ++i) all0[i] = i;

  TuraevResult out;
  LaurentPolynomial d3 = algebra::determinant(c.b3().submatrix(sel.rows3, all3));
  if (d3.is_zero()) return out;
  LaurentPolynomial d1 = algebra::determinant(c.b1().submatrix(all0, sel.cols1));
  if (d1.is_zero()) return out;
  LaurentPolynomial d2 = algebra::determinant(c.b2().without(sel.cols1, sel.rows3));
  if (d2.is_zero()) {
    out.status = TuraevResult::Status::zero;
    return out;
  }
  out.status = TuraevResult::Status::value;
  out.value = RationalFunction::normalize(d2, d3 * d1);
  return out;
}

AllSelectionsResult all_selections_torsion(const BasedChainComplex& c, bool verify) {
  const std::size_t n3 = c.dim(3), n2 = c.dim(2), n1 = c.dim(1), n0 = c.dim(0);
  AllSelectionsResult out;
  out.verified = verify;
  // Such a complex cannot be acyclic.
  if (n2 < n3 || n1 < n0 || n2 - n3 != n1 - n0) return out;
  bool found = false;
  Selection sel;
  sel.rows3 = first_combination(n3);
  do {
    sel.cols1 = first_combination(n0);
    do {
      ++out.tried;
      TuraevResult r = turaev_torsion(c, sel);
      if (!r.ok()) continue;
      ++out.succeeded;
      if (!found) {
        found = true;
        out.value = r.value;
        out.selection = sel;
        if (!verify) return out;
      } else if (r.value.has_value() != out.value.has_value() ||
                 (r.value && !algebra::equal_up_to_sign(*r.value, *out.value))) {
        out.agreement = false;
      }
    } while (next_combination(sel.cols1, n1));
  } while (next_combination(sel.rows3, n2));
  return out;
}

}  // namespace rtorsion::torsion
