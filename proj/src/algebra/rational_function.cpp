#include "rtorsion/algebra/rational_function.hpp"

#include "rtorsion/errors.hpp"

namespace rtorsion::algebra {

namespace {

// lcm of coefficient denominators divided by gcd of numerators, over both.
mpq_class content_scale(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto* poly : {&p, &q})
    for (const auto& [e, c] : poly->terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
  return mpq_class(den_lcm, num_gcd);
}

}  // namespace

RationalFunction RationalFunction::normalize(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (q.is_zero()) throw InputError("zero denominator");
  Domain f = p.domain().quotient_field();
  RationalFunction out;
  if (p.is_zero()) {
    out.num_ = LaurentPolynomial(f);
    out.den_ = LaurentPolynomial::one(f);
    return out;
  }
  LaurentPolynomial num = p.over(f), den = q.over(f);
  num = num.shifted(-num.low_exponent());
  den = den.shifted(-den.low_exponent());
  LaurentPolynomial g = polynomial_gcd(num, den);
  if (!(g == LaurentPolynomial::one(f))) {
    num = num.exact_divide(g);
    den = den.exact_divide(g);
  }
  if (f.kind() == Domain::Kind::rationals) {
    mpq_class s = content_scale(num, den);
    if (den.lowest_coefficient() < 0) s = -s;
    num = num.scaled(s);
    den = den.scaled(s);
  } else {
    mpq_class s = f.inverse(den.lowest_coefficient());
    num = num.scaled(s);
    den = den.scaled(s);
  }
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

std::optional<long> RationalFunction::degree() const {
  if (is_zero()) return std::nullopt;
  return *num_.degree() - *den_.degree();
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return normalize(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw InputError("division by zero rational function");
  return normalize(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -num_;
  return out;
}

std::string RationalFunction::to_string() const {
  if (den_ == LaurentPolynomial::one(den_.domain())) return num_.to_string();
  auto wrap = [](const LaurentPolynomial& x) {
    return x.terms().size() > 1 ? "(" + x.to_string() + ")" : x.to_string();
  };
  return wrap(num_) + "/" + wrap(den_);
}

bool equal_up_to_sign(const RationalFunction& a, const RationalFunction& b) { return a == b || a == -b; }

}  // namespace rtorsion::algebra
