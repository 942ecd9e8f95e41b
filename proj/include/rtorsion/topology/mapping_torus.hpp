#pragma once

#include <map>
#include <string>
#include <vector>

#include "rtorsion/group/presentation.hpp"
#include "rtorsion/rep/twist.hpp"
#include "rtorsion/torsion/torsion_value.hpp"

namespace rtorsion::topology {

/// Monodromy of a surface bundle over the circle whose fiber has free
/// fundamental group of rank n ≥ 2 (a surface with nonempty boundary).
///
/// Only a necessary automorphism check is performed: the abelianized
/// action must have determinant ±1.
class MonodromyData {
 public:
  /// `images[i]` is f(x_i) as a word in the fiber generators.
  /// Throws ValidationError when n < 2 or the abelianization is not
  /// invertible over Z, InputError on bad names.
  MonodromyData(std::vector<std::string> fiber_generators, std::vector<group::FreeWord> images,
                std::string stable_letter = "mu");

  /// Images given in word syntax, keyed by generator name.
  static MonodromyData parse(std::vector<std::string> fiber_generators,
                             const std::map<std::string, std::string>& images, std::string stable_letter = "mu");

  std::size_t rank() const { return generators_.size(); }
  const std::vector<std::string>& fiber_generators() const { return generators_; }
  const std::vector<group::FreeWord>& images() const { return images_; }
  const std::string& stable_letter() const { return stable_; }
  /// χ_-(Σ) = n - 1.
  long fiber_norm() const { return static_cast<long>(rank()) - 1; }

  /// n×n integer matrix, row i = exponent sums of f(x_i).
  std::vector<std::vector<long>> abelianization() const;

 private:
  std::vector<std::string> generators_;
  std::vector<group::FreeWord> images_;
  std::string stable_;
};

struct MappingTorus {
  group::GroupPresentation presentation;  // generators x_1..x_n, μ
  std::vector<long> phi;                  // (0, ..., 0, 1)
};

/// <x_1..x_n, μ | μ x_i μ^-1 f(x_i)^-1>, φ(μ) = 1 and φ(x_i) = 0.
MappingTorus mapping_torus_presentation(const MonodromyData& m);

/// Builds the twist for the mapping torus from images on x_1..x_n, μ.
rep::TwistData mapping_torus_twist(const MonodromyData& m, algebra::Domain domain, std::size_t k,
                                   std::vector<algebra::ExactMatrix> images);

/// det(t·D_μ - J) / det(t·α(μ) - 1), where D_μ is block diagonal with
/// α(μ) blocks and J has blocks α(∂f(x_i)/∂x_j). Validates `alpha` against
/// the mapping-torus presentation first.
torsion::TorsionValue fibered_torsion_formula(const MonodromyData& m, const rep::TwistData& alpha);

}  // namespace rtorsion::topology
