#pragma once

#include <optional>
#include <string>

#include "rtorsion/algebra/laurent.hpp"

namespace rtorsion::algebra {

/// Canonical representative of p/q in Q(t) modulo monomials t^k.
///
/// Canonical form, computed by `normalize`:
///  - numerator and denominator are coprime over the field and both have
///    lowest exponent 0;
///  - over Q they are integer polynomials with joint content 1 and the
///    denominator's constant term is positive;
///  - over F_p the denominator's constant term is 1.
/// Zero is stored as 0/1. Values always live over a field domain.
class RationalFunction {
 public:
  RationalFunction() = default;

  /// Throws InputError if `q` is zero.
  static RationalFunction normalize(const LaurentPolynomial& p, const LaurentPolynomial& q);
  static RationalFunction from_polynomial(const LaurentPolynomial& p) {
    return normalize(p, LaurentPolynomial::one(p.domain()));
  }

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  const Domain& domain() const { return num_.domain(); }

  bool is_zero() const { return num_.is_zero(); }

  /// deg(numerator) - deg(denominator); nullopt for zero.
  std::optional<long> degree() const;

  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string() const;

 private:
  LaurentPolynomial num_, den_;
};

/// a == ±b.
bool equal_up_to_sign(const RationalFunction& a, const RationalFunction& b);

}  // namespace rtorsion::algebra
