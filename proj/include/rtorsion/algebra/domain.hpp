#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rtorsion::algebra {

/// Exact coefficient ring: Z, Q or F_p.
///
/// Scalars of every domain are carried as `mpq_class`; a domain only decides
/// which values are admissible and how results are reduced. Elements of F_p
/// are kept as canonical residues 0..p-1.
class Domain {
 public:
  enum class Kind { integers, rationals, prime_field };

  Domain() = default;

  static Domain integers() { return Domain(Kind::integers, 0); }
  static Domain rationals() { return Domain(Kind::rationals, 0); }
  /// Throws InputError when `p` is not prime.
  static Domain prime_field(unsigned long p);

  /// Accepts "integers", "rationals", "prime:<p>" (also "Z", "Q", "F<p>").
  static Domain parse(std::string_view tag);

  Kind kind() const { return kind_; }
  unsigned long modulus() const { return p_; }
  bool is_field() const { return kind_ != Kind::integers; }

  /// Z -> Q; fields map to themselves.
  Domain quotient_field() const;

  /// Brings an arbitrary rational into the domain. For Z the value must be
  /// integral; for F_p the denominator must be invertible mod p.
  mpq_class reduce(const mpq_class& x) const;

  /// Whether `x` (already reduced) is admissible in this domain.
  bool contains(const mpq_class& x) const;

  bool is_unit(const mpq_class& x) const;
  /// Multiplicative inverse; throws unless `x` is a unit.
  mpq_class inverse(const mpq_class& x) const;

  mpq_class add(const mpq_class& a, const mpq_class& b) const { return reduce_fast(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return reduce_fast(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return reduce_fast(a * b); }
  mpq_class neg(const mpq_class& a) const { return reduce_fast(-a); }
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inverse(b)); }

  /// True when x is ±1 in this domain (for F_p: 1 or p-1).
  bool is_plus_minus_one(const mpq_class& x) const;

  std::string name() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(Kind k, unsigned long p) : kind_(k), p_(p) {}

  // Reduction for results of ring operations on admissible inputs.
  mpq_class reduce_fast(mpq_class x) const;

  Kind kind_ = Kind::integers;
  unsigned long p_ = 0;
};

/// Parses an exact scalar literal: "3", "-7/2", "12345678901234567890".
mpq_class parse_scalar(std::string_view text);

std::string scalar_to_string(const mpq_class& x);

}  // namespace rtorsion::algebra
