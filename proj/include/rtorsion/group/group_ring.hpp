#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "rtorsion/group/free_word.hpp"

namespace rtorsion::group {

class GroupPresentation;

/// Element of the integral group ring Z[F] of a free group: a finite sum
/// of reduced words with nonzero integer coefficients.
class GroupRingElement {
 public:
  using Terms = std::map<FreeWord, mpz_class>;

  GroupRingElement() = default;
  explicit GroupRingElement(const FreeWord& w, const mpz_class& c = 1);

  static GroupRingElement one() { return GroupRingElement(FreeWord{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const FreeWord& w) const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  GroupRingElement operator-() const;

  /// Convolution product; products of words are freely reduced.
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  /// Left multiplication by a group element.
  friend GroupRingElement operator*(const FreeWord& w, const GroupRingElement& a);

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  std::string to_string(const GroupPresentation& names) const;

 private:
  void add_term(const FreeWord& w, const mpz_class& c);
  Terms terms_;
};

GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b);

/// Fox free derivative ∂w/∂x_j, determined by ∂x_i/∂x_j = δ_ij and
/// ∂(uv)/∂x_j = ∂u/∂x_j + u·∂v/∂x_j.
GroupRingElement fox_derivative(const FreeWord& w, std::uint32_t j);

}  // namespace rtorsion::group
