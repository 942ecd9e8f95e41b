#include "rtorsion/torsion/wada.hpp"

#include "rtorsion/errors.hpp"

namespace rtorsion::torsion {

using algebra::ExactMatrix;
using algebra::LaurentPolynomial;
using group::FreeWord;
using group::GroupPresentation;
using group::GroupRingElement;

RationalFunction sign_normalized(const RationalFunction& r) {
  if (r.is_zero() || r.domain().kind() == algebra::Domain::Kind::prime_field) return r;
  if (sgn(r.numerator().highest_coefficient()) * sgn(r.denominator().highest_coefficient()) < 0) return -r;
  return r;
}

std::string to_string(ZeroReason r) {
  switch (r) {
    case ZeroReason::none: return "none";
    case ZeroReason::not_acyclic: return "not acyclic";
    case ZeroReason::vanishing_numerator: return "vanishing numerator";
  }
  return "none";
}

ZeroReason zero_reason_from_string(const std::string& s) {
  if (s == "none") return ZeroReason::none;
  if (s == "not acyclic") return ZeroReason::not_acyclic;
  if (s == "vanishing numerator") return ZeroReason::vanishing_numerator;
  throw InputError("unknown zero reason '" + s + "'");
}

std::vector<std::vector<GroupRingElement>> fox_matrix(const GroupPresentation& pres) {
  std::vector<std::vector<GroupRingElement>> f(pres.relator_count());
  for (std::size_t i = 0; i < pres.relator_count(); ++i)
    for (std::uint32_t j = 0; j < pres.generator_count(); ++j)
      f[i].push_back(group::fox_derivative(pres.relators()[i], j));
  return f;
}

namespace {

void check_shape(const GroupPresentation& pres) {
  if (pres.generator_count() < 2 || pres.deficiency() != 1)
    throw UnsupportedError("Wada torsion needs a deficiency-one presentation with at least two generators; got " +
                           std::to_string(pres.generator_count()) + " generators and " +
                           std::to_string(pres.relator_count()) + " relators");
}

LaurentPolynomial column_denominator(const rep::TwistData& twist, std::size_t j) {
  auto elt = GroupRingElement(FreeWord::generator(static_cast<std::uint32_t>(j))) - GroupRingElement::one();
  return algebra::determinant(rep::tensor_apply(elt, twist));
}

LaurentPolynomial column_numerator(const ExactMatrix& tensored, std::size_t k, std::size_t j) {
  std::vector<std::size_t> drop;
  for (std::size_t c = 0; c < k; ++c) drop.push_back(j * k + c);
  return algebra::determinant(tensored.without({}, drop));
}

}  // namespace

std::optional<RationalFunction> wada_column_value(const GroupPresentation& pres, const rep::TwistData& twist,
                                                  std::size_t j) {
  check_shape(pres);
  if (j >= pres.generator_count()) throw InputError("column index out of range");
  auto den = column_denominator(twist, j);
  if (den.is_zero()) return std::nullopt;
  ExactMatrix f = rep::matrix_tensor_apply(fox_matrix(pres), twist);
  return RationalFunction::normalize(column_numerator(f, twist.k(), j), den);
}

TorsionValue wada_torsion(const GroupPresentation& pres, const rep::TwistData& twist) {
  check_shape(pres);
  rep::validate_phi(pres, twist.phi());
  rep::validate_representation(pres, twist);

  TorsionValue out;
  out.units = rep::determinant_image_spec(twist);
  out.ring = twist.domain();
  out.k = twist.k();

  const ExactMatrix f = rep::matrix_tensor_apply(fox_matrix(pres), twist);
  for (std::size_t j = 0; j < pres.generator_count(); ++j) {
    auto den = column_denominator(twist, j);
    if (den.is_zero()) continue;
    if (!out.chosen_column) out.chosen_column = j;
    auto num = column_numerator(f, twist.k(), j);
    if (num.is_zero()) continue;
    out.chosen_column = j;
    out.value = sign_normalized(RationalFunction::normalize(num, den));
    out.zero_reason = ZeroReason::none;
    return out;
  }
  out.zero_reason = out.chosen_column ? ZeroReason::vanishing_numerator : ZeroReason::not_acyclic;
  return out;
}

}  // namespace rtorsion::torsion
