#include "rtorsion/algebra/laurent.hpp"

#include <cctype>
#include <vector>

#include "rtorsion/errors.hpp"

namespace rtorsion::algebra {

namespace {

// Dense ordinary polynomial, index = exponent. Only used over fields.
using Dense = std::vector<mpq_class>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p must be nonzero; returns coefficients of t^-low * p.
Dense to_dense(const LaurentPolynomial& p) {
  Dense out;
  if (p.is_zero()) return out;
  long low = p.low_exponent();
  out.resize(static_cast<std::size_t>(p.high_exponent() - low + 1));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - low)] = c;
  return out;
}

LaurentPolynomial from_dense(const Domain& d, const Dense& p, long shift = 0) {
  LaurentPolynomial::Terms terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) terms.emplace(static_cast<long>(i) + shift, p[i]);
  return LaurentPolynomial(d, terms);
}

// Long division a = q*b + r over the field `d`; b nonzero and trimmed.
void divmod(const Domain& d, Dense a, const Dense& b, Dense& q, Dense& r) {
  trim(a);
  q.clear();
  if (a.size() < b.size()) {
    r = std::move(a);
    return;
  }
  q.assign(a.size() - b.size() + 1, mpq_class(0));
  mpq_class lead_inv = d.inverse(b.back());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i] == 0) continue;
    mpq_class f = d.mul(a[i], lead_inv);
    std::size_t shift = i + 1 - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = d.sub(a[shift + j], d.mul(f, b[j]));
  }
  trim(a);
  r = std::move(a);
  trim(q);
}

void check_exponent_syntax(std::string_view s, const std::string& full) {
  if (s.empty()) throw InputError("bad Laurent literal '" + full + "'");
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(Domain d, const Terms& terms) : domain_(d) {
  for (const auto& [e, c] : terms) {
    mpq_class r = domain_.reduce(c);
    if (r != 0) terms_.emplace(e, std::move(r));
  }
}

LaurentPolynomial LaurentPolynomial::constant(Domain d, const mpq_class& c) { return monomial(d, c, 0); }

LaurentPolynomial LaurentPolynomial::monomial(Domain d, const mpq_class& c, long exponent) {
  return LaurentPolynomial(d, Terms{{exponent, c}});
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::optional<long> LaurentPolynomial::degree() const {
  if (is_zero()) return std::nullopt;
  return high_exponent() - low_exponent();
}

mpq_class LaurentPolynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

LaurentPolynomial LaurentPolynomial::over(Domain d) const {
  if (d == domain_) return *this;
  return LaurentPolynomial(d, terms_);
}

LaurentPolynomial LaurentPolynomial::shifted(long by) const {
  LaurentPolynomial out(domain_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + by, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::scaled(const mpq_class& c) const {
  LaurentPolynomial out(domain_);
  mpq_class s = domain_.reduce(c);
  if (s == 0) return out;
  for (const auto& [e, v] : terms_) {
    mpq_class p = domain_.mul(v, s);
    if (p != 0) out.terms_.emplace_hint(out.terms_.end(), e, std::move(p));
  }
  return out;
}

void LaurentPolynomial::check_domain(const LaurentPolynomial& o) const {
  if (!(domain_ == o.domain_))
    throw InputError("domain mismatch: " + domain_.name() + " vs " + o.domain_.name());
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  check_domain(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = domain_.add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  check_domain(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, domain_.neg(c));
    if (!inserted) {
      it->second = domain_.sub(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_domain(b);
  const Domain& d = a.domain_;
  LaurentPolynomial out(d);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      mpq_class p = d.mul(ca, cb);
      auto [it, inserted] = out.terms_.try_emplace(ea + eb, p);
      if (!inserted) it->second = d.add(it->second, p);
    }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out(domain_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, domain_.neg(c));
  return out;
}

LaurentPolynomial LaurentPolynomial::exact_divide(const LaurentPolynomial& divisor) const {
  check_domain(divisor);
  if (divisor.is_zero()) throw InputError("division by the zero polynomial");
  if (is_zero()) return *this;
  if (divisor.is_monomial()) {
    const auto& [e, c] = *divisor.terms_.begin();
    return shifted(-e).scaled(domain_.inverse(c));
  }
  if (!domain_.is_field()) throw InputError("exact_divide needs a field domain, got " + domain_.name());
  Dense q, r;
  divmod(domain_, to_dense(*this), to_dense(divisor), q, r);
  if (!r.empty()) throw InputError("polynomial division is not exact");
  return from_dense(domain_, q, low_exponent() - divisor.low_exponent());
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    mpq_class mag = negative ? mpq_class(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    bool unit = mag == 1;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (!unit) out += mag.get_str() + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::parse(Domain d, std::string_view text) {
  std::string full(text);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InputError("empty Laurent literal");

  // Split into signed terms at top-level '+'/'-' not directly after '^'.
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool sign = (c == '+' || c == '-');
    bool after_caret = i > 0 && (s[i - 1] == '^' || s[i - 1] == '(' || s[i - 1] == '{');
    if (sign && !after_caret && !cur.empty()) {
      terms.push_back(cur);
      cur.clear();
    }
    cur += c;
  }
  terms.push_back(cur);

  LaurentPolynomial out(d);
  for (std::string term : terms) {
    bool negative = false;
    if (term[0] == '+' || term[0] == '-') {
      negative = term[0] == '-';
      term.erase(0, 1);
    }
    if (term.empty()) throw InputError("bad Laurent literal '" + full + "'");
    std::size_t tpos = term.find('t');
    mpq_class coef(1);
    long exponent = 0;
    std::string coef_part = tpos == std::string::npos ? term : term.substr(0, tpos);
    if (!coef_part.empty() && coef_part.back() == '*') {
      coef_part.pop_back();
      if (coef_part.empty()) throw InputError("bad Laurent literal '" + full + "'");
    }
    if (!coef_part.empty()) coef = parse_scalar(coef_part);
    if (tpos != std::string::npos) {
      std::string rest = term.substr(tpos + 1);
      exponent = 1;
      if (!rest.empty()) {
        if (rest[0] != '^') throw InputError("bad Laurent literal '" + full + "'");
        rest.erase(0, 1);
        if (!rest.empty() && ((rest.front() == '(' && rest.back() == ')') || (rest.front() == '{' && rest.back() == '}')))
          rest = rest.substr(1, rest.size() - 2);
        check_exponent_syntax(rest, full);
        mpq_class e = parse_scalar(rest);
        if (e.get_den() != 1 || !e.get_num().fits_slong_p()) throw InputError("bad exponent in '" + full + "'");
        exponent = e.get_num().get_si();
      }
    }
    if (negative) coef = -coef;
    out += monomial(d, coef, exponent);
  }
  return out;
}

LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  Domain f = a.domain().quotient_field();
  if (a.is_zero() && b.is_zero()) return LaurentPolynomial(f);
  Dense x = to_dense(a.over(f)), y = to_dense(b.over(f));
  if (x.empty()) std::swap(x, y);
  while (!y.empty()) {
    Dense q, r;
    divmod(f, x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  mpq_class inv = f.inverse(x.back());
  for (auto& c : x) c = f.mul(c, inv);
  return from_dense(f, x);
}

}  // namespace rtorsion::algebra
