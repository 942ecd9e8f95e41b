#pragma once

#include <optional>
#include <vector>

#include "rtorsion/group/presentation.hpp"
#include "rtorsion/torsion/torsion_value.hpp"

namespace rtorsion::torsion {

/// Fox Jacobian: entry (i, j) is ∂r_i/∂x_j.
std::vector<std::vector<group::GroupRingElement>> fox_matrix(const group::GroupPresentation& pres);

/// Torsion computed with column block `j` of the tensored Fox matrix
/// removed: det(F_j)/det(α(x_j)t^{φ(x_j)} - 1). Returns nullopt when the
/// denominator vanishes; the returned value may be zero.
std::optional<RationalFunction> wada_column_value(const group::GroupPresentation& pres, const rep::TwistData& twist,
                                                  std::size_t j);

/// Wada's invariant of a deficiency-one presentation, using the lowest
/// column with a nonvanishing denominator.
///
/// Validates φ and α against the relators first (ValidationError) and
/// rejects presentations that are not of deficiency one with at least two
/// generators (UnsupportedError).
TorsionValue wada_torsion(const group::GroupPresentation& pres, const rep::TwistData& twist);

}  // namespace rtorsion::torsion
