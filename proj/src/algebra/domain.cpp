#include "rtorsion/algebra/domain.hpp"

#include <cctype>

#include "rtorsion/errors.hpp"

namespace rtorsion::algebra {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

mpz_class mod_p(const mpz_class& x, unsigned long p) {
  mpz_class r = x % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

Domain Domain::prime_field(unsigned long p) {
  if (!is_prime(p)) throw InputError("prime field modulus " + std::to_string(p) + " is not prime");
  return Domain(Kind::prime_field, p);
}

Domain Domain::parse(std::string_view tag) {
  if (tag == "integers" || tag == "Z") return integers();
  if (tag == "rationals" || tag == "Q") return rationals();
  std::string_view digits;
  if (tag.starts_with("prime:"))
    digits = tag.substr(6);
  else if (tag.starts_with("F") && tag.size() > 1)
    digits = tag.substr(1);
  if (!digits.empty()) {
    unsigned long p = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || p > 4294967295UL)
        throw InputError("bad ring tag '" + std::string(tag) + "'");
      p = p * 10 + static_cast<unsigned long>(c - '0');
    }
    return prime_field(p);
  }
  throw InputError("unknown ring tag '" + std::string(tag) + "' (expected integers, rationals or prime:<p>)");
}

Domain Domain::quotient_field() const {
  return kind_ == Kind::integers ? rationals() : *this;
}

mpq_class Domain::reduce(const mpq_class& x) const {
  switch (kind_) {
    case Kind::integers:
      if (x.get_den() != 1) throw InputError(x.get_str() + " is not an integer");
      return x;
    case Kind::rationals:
      return x;
    case Kind::prime_field: {
      mpz_class den = mod_p(x.get_den(), p_);
      if (den == 0) throw InputError(x.get_str() + " has a denominator divisible by " + std::to_string(p_));
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
      return mpq_class(mod_p(x.get_num() * inv, p_));
    }
  }
  return x;
}

mpq_class Domain::reduce_fast(mpq_class x) const {
  if (kind_ != Kind::prime_field) return x;
  if (x.get_den() != 1) return reduce(x);
  if (x >= 0 && x < p_) return x;
  return mpq_class(mod_p(x.get_num(), p_));
}

bool Domain::contains(const mpq_class& x) const {
  switch (kind_) {
    case Kind::integers: return x.get_den() == 1;
    case Kind::rationals: return true;
    case Kind::prime_field: return x.get_den() == 1 && x >= 0 && x < p_;
  }
  return false;
}

bool Domain::is_unit(const mpq_class& x) const {
  if (kind_ == Kind::integers) return x == 1 || x == -1;
  return x != 0;
}

mpq_class Domain::inverse(const mpq_class& x) const {
  if (!is_unit(x)) throw InputError(x.get_str() + " is not a unit in " + name());
  if (kind_ == Kind::prime_field) return reduce(mpq_class(1) / x);
  return mpq_class(1) / x;
}

bool Domain::is_plus_minus_one(const mpq_class& x) const {
  if (kind_ == Kind::prime_field) return x == 1 || x == static_cast<long>(p_ - 1);
  return x == 1 || x == -1;
}

std::string Domain::name() const {
  switch (kind_) {
    case Kind::integers: return "integers";
    case Kind::rationals: return "rationals";
    case Kind::prime_field: return "prime:" + std::to_string(p_);
  }
  return "?";
}

mpq_class parse_scalar(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return InputError("bad scalar literal '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false, digit_before = false, digit_after = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/') {
      if (slash) throw bad();
      slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[j]))) {
      (slash ? digit_after : digit_before) = true;
    } else {
      throw bad();
    }
  }
  if (!digit_before || (slash && !digit_after)) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw bad();
  q.canonicalize();
  return q;
}

std::string scalar_to_string(const mpq_class& x) { return x.get_str(); }

}  // namespace rtorsion::algebra
