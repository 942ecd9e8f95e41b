#pragma once

#include <optional>
#include <string>

#include "rtorsion/algebra/rational_function.hpp"
#include "rtorsion/rep/twist.hpp"

namespace rtorsion::torsion {

using algebra::RationalFunction;

/// Why a torsion value is zero. Both cases are the value 0 in Q(t); they
/// are kept apart only for reporting.
enum class ZeroReason { none, not_acyclic, vanishing_numerator };

std::string to_string(ZeroReason r);
ZeroReason zero_reason_from_string(const std::string& s);

/// Picks the sign of a torsion representative: over Z and Q the leading
/// coefficients of numerator and denominator get the same sign. Values over
/// F_p are returned unchanged.
RationalFunction sign_normalized(const RationalFunction& r);

/// τ(N, φ⊗α) together with its indeterminacy ±r·t^m, r ∈ det α(π).
struct TorsionValue {
  std::optional<RationalFunction> value;  // nullopt encodes τ = 0
  ZeroReason zero_reason = ZeroReason::none;
  rep::UnitSpec units;
  algebra::Domain ring;  // the coefficient ring R of α
  std::size_t k = 1;
  std::optional<std::size_t> chosen_column;

  bool is_zero() const { return !value.has_value(); }
  std::optional<long> degree() const { return value ? value->degree() : std::nullopt; }
  std::string to_string() const { return value ? value->to_string() : "0"; }

  friend bool operator==(const TorsionValue&, const TorsionValue&) = default;
};

}  // namespace rtorsion::torsion
