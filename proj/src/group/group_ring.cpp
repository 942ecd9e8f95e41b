#include "rtorsion/group/group_ring.hpp"

#include "rtorsion/group/presentation.hpp"

namespace rtorsion::group {

GroupRingElement::GroupRingElement(const FreeWord& w, const mpz_class& c) {
  if (c != 0) terms_.emplace(w, c);
}

mpz_class GroupRingElement::coefficient(const FreeWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void GroupRingElement::add_term(const FreeWord& w, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, -c);
  return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

GroupRingElement operator*(const FreeWord& w, const GroupRingElement& a) {
  GroupRingElement out;
  for (const auto& [wa, c] : a.terms_) out.add_term(w * wa, c);
  return out;
}

std::string GroupRingElement::to_string(const GroupPresentation& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    bool negative = c < 0;
    mpz_class mag = negative ? mpz_class(-c) : c;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::string word = w.empty() ? "1" : names.format_word(w);
    if (mag != 1)
      out += mag.get_str() + (w.empty() ? "" : "*" + word);
    else
      out += word;
  }
  return out;
}

GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }

GroupRingElement fox_derivative(const FreeWord& w, std::uint32_t j) {
  // Letterwise: for w = l_1 ... l_n, ∂w = Σ_i (l_1...l_{i-1}) ∂l_i, with
  // ∂x_j = 1 and ∂x_j^{-1} = -x_j^{-1}.
  GroupRingElement out;
  FreeWord prefix;
  for (const Letter& l : w.letters()) {
    if (l.generator == j) {
      if (l.exponent > 0)
        out += GroupRingElement(prefix, 1);
      else
        out -= GroupRingElement(prefix * FreeWord::generator(j, -1));
    }
    prefix *= FreeWord::generator(l.generator, l.exponent);
  }
  return out;
}

}  // namespace rtorsion::group
