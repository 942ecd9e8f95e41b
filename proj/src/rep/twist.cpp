#include "rtorsion/rep/twist.hpp"

#include <algorithm>
#include <numeric>

#include "rtorsion/errors.hpp"

namespace rtorsion::rep {

using algebra::LaurentPolynomial;
using group::FreeWord;
using group::GroupPresentation;
using group::GroupRingElement;

PhiCheck validate_phi(const GroupPresentation& pres, std::span<const long> phi) {
  if (phi.size() != pres.generator_count())
    throw ValidationError("phi has " + std::to_string(phi.size()) + " values for " +
                          std::to_string(pres.generator_count()) + " generators");
  for (std::size_t i = 0; i < pres.relator_count(); ++i) {
    const FreeWord& r = pres.relators()[i];
    long sum = 0;
    for (const auto& l : r.letters()) sum += l.exponent * phi[l.generator];
    if (sum != 0)
      throw ValidationError("phi is not a homomorphism: relator " + std::to_string(i) + " (" +
                            pres.format_word(r) + ") has phi-sum " + std::to_string(sum));
  }
  PhiCheck out;
  for (long v : phi) out.gcd = std::gcd(out.gcd, v);
  out.primitive = out.gcd == 1;
  return out;
}

TwistData::TwistData(Domain domain, std::size_t k, std::vector<long> phi, std::vector<ExactMatrix> images)
    : domain_(domain), k_(k), phi_(std::move(phi)), images_(std::move(images)) {
  if (k_ == 0) throw DimensionError("representation dimension must be positive");
  if (images_.size() != phi_.size())
    throw DimensionError("representation has " + std::to_string(images_.size()) + " images for " +
                         std::to_string(phi_.size()) + " generators");
  inverses_.reserve(images_.size());
  for (std::size_t g = 0; g < images_.size(); ++g) {
    ExactMatrix& m = images_[g];
    if (m.rows() != k_ || m.cols() != k_)
      throw DimensionError("image of generator " + std::to_string(g) + " is not " + std::to_string(k_) + "x" +
                           std::to_string(k_));
    if (!m.is_constant()) throw ValidationError("image of generator " + std::to_string(g) + " is not constant");
    m = m.over(domain_);
    auto det = algebra::determinant(m);
    if (!domain_.is_unit(det.coefficient(0)))
      throw ValidationError("image of generator " + std::to_string(g) + " has non-unit determinant " +
                            det.to_string());
    inverses_.push_back(algebra::inverse_constant(m));
  }
}

TwistData TwistData::trivial(std::vector<long> phi, Domain domain) {
  std::vector<ExactMatrix> images(phi.size(), ExactMatrix::identity(domain, 1));
  return TwistData(domain, 1, std::move(phi), std::move(images));
}

ExactMatrix TwistData::word_image(const FreeWord& w) const {
  ExactMatrix m = ExactMatrix::identity(domain_, k_);
  for (const auto& l : w.letters()) m = m * (l.exponent > 0 ? images_.at(l.generator) : inverses_.at(l.generator));
  return m;
}

long TwistData::phi_of(const FreeWord& w) const {
  long s = 0;
  for (const auto& l : w.letters()) s += l.exponent * phi_.at(l.generator);
  return s;
}

void validate_representation(const GroupPresentation& pres, const TwistData& twist) {
  if (twist.generator_count() != pres.generator_count())
    throw ValidationError("representation covers " + std::to_string(twist.generator_count()) + " generators, " +
                          "presentation has " + std::to_string(pres.generator_count()));
  for (std::uint32_t g = 0; g < twist.generator_count(); ++g) {
    auto det = algebra::determinant(twist.image(g));
    if (!twist.domain().is_unit(det.coefficient(0)))
      throw ValidationError("image of " + pres.generators()[g] + " is not invertible");
  }
  const ExactMatrix id = ExactMatrix::identity(twist.domain(), twist.k());
  for (std::size_t i = 0; i < pres.relator_count(); ++i) {
    const auto& r = pres.relators()[i];
    ExactMatrix img = twist.word_image(r);
    if (!(img == id))
      throw ValidationError("relator " + std::to_string(i) + " (" + pres.format_word(r) +
                            ") maps to " + img.to_string() + ", not the identity");
  }
}

ExactMatrix tensor_apply(const GroupRingElement& elt, const TwistData& twist) {
  const Domain& d = twist.domain();
  ExactMatrix out(d, twist.k(), twist.k());
  for (const auto& [w, c] : elt.terms()) {
    auto scale = LaurentPolynomial::monomial(d, mpq_class(c), twist.phi_of(w));
    out = out + twist.word_image(w).scaled(scale);
  }
  return out;
}

ExactMatrix matrix_tensor_apply(const std::vector<std::vector<GroupRingElement>>& m, const TwistData& twist) {
  const std::size_t k = twist.k();
  const std::size_t rows = m.size(), cols = rows ? m.front().size() : 0;
  ExactMatrix out(twist.domain(), rows * k, cols * k);
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols) throw DimensionError("ragged group-ring matrix");
    for (std::size_t j = 0; j < cols; ++j) out.set_block(i * k, j * k, tensor_apply(m[i][j], twist));
  }
  return out;
}

UnitSpec determinant_image_spec(const TwistData& twist, int /*search_bound*/) {
  UnitSpec spec;
  const Domain& d = twist.domain();
  for (std::uint32_t g = 0; g < twist.generator_count(); ++g) {
    mpq_class det = algebra::determinant(twist.image(g)).coefficient(0);
    if (d.is_plus_minus_one(det)) continue;
    if (std::find(spec.generators.begin(), spec.generators.end(), det) == spec.generators.end())
      spec.generators.push_back(det);
  }
  if (!spec.generators.empty()) spec.kind = UnitSpec::Kind::generated_by;
  return spec;
}

}  // namespace rtorsion::rep
