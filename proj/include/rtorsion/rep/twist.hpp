#pragma once

#include <span>
#include <vector>

#include "rtorsion/algebra/matrix.hpp"
#include "rtorsion/group/group_ring.hpp"
#include "rtorsion/group/presentation.hpp"

namespace rtorsion::rep {

using algebra::Domain;
using algebra::ExactMatrix;

/// Outcome of checking a class φ: π → Z given on generators.
struct PhiCheck {
  bool primitive = false;
  long gcd = 0;  // gcd of the generator values
};

/// Throws ValidationError naming the first relator whose φ-weighted exponent
/// sum is nonzero; also when the value count does not match the generators.
PhiCheck validate_phi(const group::GroupPresentation& pres, std::span<const long> phi);

/// Describes the subgroup of R^× generated by det α(π) together with -1.
struct UnitSpec {
  enum class Kind { plus_minus_one, generated_by, unknown };
  Kind kind = Kind::plus_minus_one;
  std::vector<mpq_class> generators;  // only for generated_by; never ±1

  friend bool operator==(const UnitSpec&, const UnitSpec&) = default;
};

/// The pair (φ, α): an integer per generator and an invertible k×k matrix
/// over R per generator. Generator g acts through α(g)·t^{φ(g)}.
class TwistData {
 public:
  TwistData() = default;
  /// Throws DimensionError on shape mismatches and ValidationError when an
  /// image is not invertible over `domain`.
  TwistData(Domain domain, std::size_t k, std::vector<long> phi, std::vector<ExactMatrix> images);

  /// k = 1, α(g) = 1 for every generator.
  static TwistData trivial(std::vector<long> phi, Domain domain = Domain::integers());

  const Domain& domain() const { return domain_; }
  std::size_t k() const { return k_; }
  std::size_t generator_count() const { return phi_.size(); }
  const std::vector<long>& phi() const { return phi_; }
  const ExactMatrix& image(std::uint32_t g) const { return images_.at(g); }
  const ExactMatrix& inverse_image(std::uint32_t g) const { return inverses_.at(g); }

  /// α(w) as a constant matrix.
  ExactMatrix word_image(const group::FreeWord& w) const;
  long phi_of(const group::FreeWord& w) const;

 private:
  Domain domain_;
  std::size_t k_ = 1;
  std::vector<long> phi_;
  std::vector<ExactMatrix> images_, inverses_;
};

/// Checks that every relator maps to the identity and every generator image
/// has unit determinant. Throws ValidationError naming the offending relator.
void validate_representation(const group::GroupPresentation& pres, const TwistData& twist);

/// Σ c·α(w)·t^{φ(w)} over the terms c·w of `elt`; a k×k matrix over R[t^±1].
ExactMatrix tensor_apply(const group::GroupRingElement& elt, const TwistData& twist);

/// Entrywise application: the (i, j) k×k block is tensor_apply(m[i][j]).
ExactMatrix matrix_tensor_apply(const std::vector<std::vector<group::GroupRingElement>>& m, const TwistData& twist);

/// Units allowed by the indeterminacy ±r·t^k, r ∈ det α(π).
/// `search_bound` is kept for interface symmetry with the monicity search.
UnitSpec determinant_image_spec(const TwistData& twist, int search_bound = 6);

}  // namespace rtorsion::rep
