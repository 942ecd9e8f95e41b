#include "rtorsion/topology/mapping_torus.hpp"

#include <algorithm>

#include "rtorsion/errors.hpp"

namespace rtorsion::topology {

using algebra::Domain;
using algebra::ExactMatrix;
using algebra::LaurentPolynomial;
using algebra::RationalFunction;
using group::FreeWord;

MonodromyData::MonodromyData(std::vector<std::string> fiber_generators, std::vector<FreeWord> images,
                             std::string stable_letter)
    : generators_(std::move(fiber_generators)), images_(std::move(images)), stable_(std::move(stable_letter)) {
  if (generators_.size() < 2)
    throw ValidationError("monodromy needs a fiber of rank at least 2, got " + std::to_string(generators_.size()));
  if (images_.size() != generators_.size())
    throw ValidationError("monodromy gives " + std::to_string(images_.size()) + " images for " +
                          std::to_string(generators_.size()) + " generators");
  if (std::find(generators_.begin(), generators_.end(), stable_) != generators_.end())
    throw InputError("stable letter '" + stable_ + "' clashes with a fiber generator");
  // Checks names and letter ranges.
  group::GroupPresentation names(generators_, images_);

  auto ab = abelianization();
  ExactMatrix m(Domain::integers(), rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) m(i, j) = LaurentPolynomial::constant(Domain::integers(), ab[i][j]);
  auto det = algebra::determinant(m);
  if (!(det == LaurentPolynomial::one(Domain::integers()) || det == -LaurentPolynomial::one(Domain::integers())))
    throw ValidationError("monodromy is not an automorphism: abelianized determinant is " + det.to_string());
}

MonodromyData MonodromyData::parse(std::vector<std::string> fiber_generators,
                                   const std::map<std::string, std::string>& images, std::string stable_letter) {
  group::GroupPresentation names(fiber_generators, {});
  std::vector<FreeWord> words;
  for (const auto& g : fiber_generators) {
    auto it = images.find(g);
    if (it == images.end()) throw InputError("monodromy image of '" + g + "' is missing");
    words.push_back(names.parse_word(it->second));
  }
  if (images.size() != fiber_generators.size()) throw InputError("monodromy lists images for unknown generators");
  return MonodromyData(std::move(fiber_generators), std::move(words), std::move(stable_letter));
}

std::vector<std::vector<long>> MonodromyData::abelianization() const {
  std::vector<std::vector<long>> out(rank(), std::vector<long>(rank(), 0));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) out[i][j] = images_[i].exponent_sum(static_cast<std::uint32_t>(j));
  return out;
}

MappingTorus mapping_torus_presentation(const MonodromyData& m) {
  const std::size_t n = m.rank();
  std::vector<std::string> gens = m.fiber_generators();
  gens.push_back(m.stable_letter());
  const auto mu = static_cast<std::uint32_t>(n);
  std::vector<FreeWord> relators;
  for (std::size_t i = 0; i < n; ++i) {
    FreeWord r = FreeWord::generator(mu) * FreeWord::generator(static_cast<std::uint32_t>(i)) *
                 FreeWord::generator(mu, -1) * m.images()[i].inverse();
    relators.push_back(std::move(r));
  }
  std::vector<long> phi(n + 1, 0);
  phi[n] = 1;
  return {group::GroupPresentation(std::move(gens), std::move(relators)), std::move(phi)};
}

rep::TwistData mapping_torus_twist(const MonodromyData& m, Domain domain, std::size_t k,
                                   std::vector<ExactMatrix> images) {
  return rep::TwistData(domain, k, mapping_torus_presentation(m).phi, std::move(images));
}

torsion::TorsionValue fibered_torsion_formula(const MonodromyData& m, const rep::TwistData& alpha) {
  const MappingTorus torus = mapping_torus_presentation(m);
  if (alpha.phi() != torus.phi) throw ValidationError("twist class must be (0, ..., 0, 1) on the mapping torus");
  rep::validate_representation(torus.presentation, alpha);

  const std::size_t n = m.rank(), k = alpha.k();
  const Domain& d = alpha.domain();
  const auto mu = static_cast<std::uint32_t>(n);
  const auto t = LaurentPolynomial::t(d);

  std::vector<std::vector<group::GroupRingElement>> jacobian(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      jacobian[i].push_back(group::fox_derivative(m.images()[i], static_cast<std::uint32_t>(j)));

  const ExactMatrix t_mu = alpha.image(mu).scaled(t);
  ExactMatrix diag(d, n * k, n * k);
  for (std::size_t i = 0; i < n; ++i) diag.set_block(i * k, i * k, t_mu);
  const ExactMatrix lhs = diag - rep::matrix_tensor_apply(jacobian, alpha);

  LaurentPolynomial num = algebra::determinant(lhs);
  LaurentPolynomial den = algebra::determinant(t_mu - ExactMatrix::identity(d, k));

  torsion::TorsionValue out;
  out.units = rep::determinant_image_spec(alpha);
  out.ring = d;
  out.k = k;
  out.chosen_column = n;
  if (num.is_zero())
    out.zero_reason = torsion::ZeroReason::vanishing_numerator;
  else
    out.value = torsion::sign_normalized(RationalFunction::normalize(num, den));
  return out;
}

}  // namespace rtorsion::topology
