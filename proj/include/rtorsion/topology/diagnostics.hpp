#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtorsion/torsion/torsion_value.hpp"

namespace rtorsion::topology {

using torsion::TorsionValue;

enum class Monicity { monic, not_monic, unknown };

std::string to_string(Monicity m);
Monicity monicity_from_string(const std::string& s);

inline constexpr int default_search_bound = 6;

/// Whether some representative of τ under ±r·t^m (r in the determinant
/// image) is a quotient of two polynomials with lowest and highest
/// coefficients ±1 in R[t^±1].
///
/// Over Z this is decided on the primitive parts of the canonical numerator
/// and denominator. Over a field only the value's outermost Laurent
/// coefficients matter. When the determinant image is not ±1, unit
/// membership is searched among products of at most `search_bound`
/// generators; over F_p the finite subgroup is enumerated instead.
/// τ = 0 is never monic.
Monicity monicity_verdict(const TorsionValue& v, int search_bound = default_search_bound);

/// ceil(deg τ / k): a lower bound for the Thurston norm. nullopt when τ = 0.
std::optional<long> norm_lower_bound(const TorsionValue& v);

struct FiberedVerdict {
  enum class Status { no_obstruction, obstructed };
  enum class Reason { none, zero, non_monic, degree };
  Status status = Status::no_obstruction;
  Reason reason = Reason::none;

  bool obstructed() const { return status == Status::obstructed; }
  friend bool operator==(const FiberedVerdict&, const FiberedVerdict&) = default;
};

std::string to_string(FiberedVerdict::Reason r);
FiberedVerdict::Reason fibered_reason_from_string(const std::string& s);

/// Contrapositive of the fibered-class theorem: a fibered class has nonzero,
/// monic torsion of degree k·‖φ‖_T. NoObstruction never certifies fiberedness.
FiberedVerdict fibered_obstruction(const TorsionValue& v, int search_bound = default_search_bound,
                                   std::optional<long> known_norm = std::nullopt);

struct DiagnosticsReport {
  TorsionValue torsion;
  std::optional<long> degree;
  Monicity monic = Monicity::unknown;
  std::optional<long> norm_lower_bound;
  std::optional<long> known_norm;
  FiberedVerdict fibered_verdict;
  std::vector<std::string> warnings;

  friend bool operator==(const DiagnosticsReport&, const DiagnosticsReport&) = default;
};

DiagnosticsReport diagnose(const TorsionValue& v, int search_bound = default_search_bound,
                           std::optional<long> known_norm = std::nullopt, std::vector<std::string> warnings = {});

}  // namespace rtorsion::topology
