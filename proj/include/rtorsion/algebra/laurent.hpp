#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "rtorsion/algebra/domain.hpp"

namespace rtorsion::algebra {

/// Element of R[t, t^-1] for an exact coefficient domain R.
///
/// Stored sparsely as exponent -> coefficient with no zero coefficients, so
/// the zero polynomial has empty support. Two polynomials compare equal only
/// if they live over the same domain and have identical terms.
class LaurentPolynomial {
 public:
  using Terms = std::map<long, mpq_class>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Domain d) : domain_(d) {}
  /// Coefficients are reduced into `d`; zero coefficients are dropped.
  LaurentPolynomial(Domain d, const Terms& terms);

  static LaurentPolynomial constant(Domain d, const mpq_class& c);
  static LaurentPolynomial monomial(Domain d, const mpq_class& c, long exponent);
  static LaurentPolynomial one(Domain d) { return constant(d, 1); }
  static LaurentPolynomial t(Domain d) { return monomial(d, 1, 1); }

  /// Parses "t^-1 + 2 - t^3", "3/2*t^2", "-t", "0".
  static LaurentPolynomial parse(Domain d, std::string_view text);

  const Domain& domain() const { return domain_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Lowest / highest exponent in the support. Undefined for zero.
  long low_exponent() const { return terms_.begin()->first; }
  long high_exponent() const { return terms_.rbegin()->first; }
  const mpq_class& lowest_coefficient() const { return terms_.begin()->second; }
  const mpq_class& highest_coefficient() const { return terms_.rbegin()->second; }

  /// Span s - r of the support; nullopt for the zero polynomial.
  std::optional<long> degree() const;

  mpq_class coefficient(long exponent) const;

  /// Same coefficients, reinterpreted over another domain (reduced there).
  LaurentPolynomial over(Domain d) const;

  LaurentPolynomial shifted(long by) const;
  LaurentPolynomial scaled(const mpq_class& c) const;

  /// Exact quotient over a field domain; throws if `divisor` does not divide.
  LaurentPolynomial exact_divide(const LaurentPolynomial& divisor) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Human-readable form, highest exponent first: "t^2 - t + 1".
  std::string to_string() const;

 private:
  void check_domain(const LaurentPolynomial& o) const;

  Domain domain_;
  Terms terms_;
};

/// Monic greatest common divisor over the quotient field of the inputs'
/// domain, as an ordinary polynomial with lowest exponent 0. Monomial factors
/// are units and therefore ignored. gcd(0, 0) = 0.
LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace rtorsion::algebra
