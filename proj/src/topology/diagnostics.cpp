#include "rtorsion/topology/diagnostics.hpp"

#include <set>

#include "rtorsion/errors.hpp"

namespace rtorsion::topology {

using algebra::Domain;
using algebra::LaurentPolynomial;
using rep::UnitSpec;

std::string to_string(Monicity m) {
  switch (m) {
    case Monicity::monic: return "Monic";
    case Monicity::not_monic: return "NotMonic";
    case Monicity::unknown: return "Unknown";
  }
  return "Unknown";
}

Monicity monicity_from_string(const std::string& s) {
  if (s == "Monic") return Monicity::monic;
  if (s == "NotMonic") return Monicity::not_monic;
  if (s == "Unknown") return Monicity::unknown;
  throw InputError("unknown monicity verdict '" + s + "'");
}

std::string to_string(FiberedVerdict::Reason r) {
  switch (r) {
    case FiberedVerdict::Reason::none: return "none";
    case FiberedVerdict::Reason::zero: return "zero";
    case FiberedVerdict::Reason::non_monic: return "non-monic";
    case FiberedVerdict::Reason::degree: return "degree";
  }
  return "none";
}

FiberedVerdict::Reason fibered_reason_from_string(const std::string& s) {
  if (s == "none") return FiberedVerdict::Reason::none;
  if (s == "zero") return FiberedVerdict::Reason::zero;
  if (s == "non-monic") return FiberedVerdict::Reason::non_monic;
  if (s == "degree") return FiberedVerdict::Reason::degree;
  throw InputError("unknown obstruction reason '" + s + "'");
}

namespace {

enum class Membership { yes, no, inconclusive };

// Is x in ±<generators>? Products of at most `budget` generators or inverses.
bool search_products(const Domain& d, const mpq_class& x, const std::vector<mpq_class>& gens, std::size_t i,
                     const mpq_class& acc, int budget) {
  if (d.is_plus_minus_one(d.mul(x, acc))) return true;
  if (i == gens.size() || budget == 0) return false;
  if (search_products(d, x, gens, i + 1, acc, budget)) return true;
  mpq_class up = acc, down = acc;
  const mpq_class inv = d.inverse(gens[i]);
  for (int e = 1; e <= budget; ++e) {
    up = d.mul(up, gens[i]);
    down = d.mul(down, inv);
    if (search_products(d, x, gens, i + 1, up, budget - e)) return true;
    if (search_products(d, x, gens, i + 1, down, budget - e)) return true;
  }
  return false;
}

Membership in_unit_group(const Domain& d, const mpq_class& x, const UnitSpec& units, int search_bound) {
  if (d.is_plus_minus_one(x)) return Membership::yes;
  switch (units.kind) {
    case UnitSpec::Kind::plus_minus_one:
      return Membership::no;
    case UnitSpec::Kind::unknown:
      return Membership::inconclusive;
    case UnitSpec::Kind::generated_by:
      break;
  }
  if (d.kind() == Domain::Kind::prime_field) {
    // The subgroup of F_p^× is finite: close it up exactly.
    std::set<mpq_class> seen{mpq_class(1), d.reduce(-1)};
    std::vector<mpq_class> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
      std::vector<mpq_class> next;
      for (const auto& a : frontier)
        for (const auto& g : units.generators) {
          mpq_class b = d.mul(a, g);
          if (seen.insert(b).second) next.push_back(b);
        }
      frontier = std::move(next);
    }
    return seen.contains(d.reduce(x)) ? Membership::yes : Membership::no;
  }
  return search_products(d, x, units.generators, 0, mpq_class(1), search_bound) ? Membership::yes
                                                                                  : Membership::inconclusive;
}

mpz_class content(const LaurentPolynomial& p) {
  mpz_class g = 0;
  for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  return g;
}

}  // namespace

Monicity monicity_verdict(const TorsionValue& v, int search_bound) {
  if (v.is_zero()) return Monicity::not_monic;
  const auto& num = v.value->numerator();
  const auto& den = v.value->denominator();
  const Domain f = num.domain();

  mpq_class scale;  // the scalar that must be ± an allowed unit
  if (v.ring.kind() == Domain::Kind::integers) {
    // Gauss: representatives differ by rational scalars, so the primitive
    // parts of numerator and denominator are determined up to sign.
    mpz_class c1 = content(num), c2 = content(den);
    auto outer_unit = [](const LaurentPolynomial& p, const mpz_class& c) {
      return abs(p.lowest_coefficient()) == c && abs(p.highest_coefficient()) == c;
    };
    if (!outer_unit(num, c1) || !outer_unit(den, c2)) return Monicity::not_monic;
    scale = mpq_class(c1, c2);
    scale.canonicalize();
  } else {
    mpq_class low = f.div(num.lowest_coefficient(), den.lowest_coefficient());
    mpq_class high = f.div(num.highest_coefficient(), den.highest_coefficient());
    if (!f.is_plus_minus_one(f.div(low, high))) return Monicity::not_monic;
    scale = low;
  }
  switch (in_unit_group(v.ring.kind() == Domain::Kind::integers ? f : v.ring, scale, v.units, search_bound)) {
    case Membership::yes: return Monicity::monic;
    case Membership::no: return Monicity::not_monic;
    case Membership::inconclusive: return Monicity::unknown;
  }
  return Monicity::unknown;
}

std::optional<long> norm_lower_bound(const TorsionValue& v) {
  auto deg = v.degree();
  if (!deg) return std::nullopt;
  const long k = static_cast<long>(v.k);
  long q = *deg / k;
  if (*deg % k != 0 && *deg > 0) ++q;
  return q;
}

FiberedVerdict fibered_obstruction(const TorsionValue& v, int search_bound, std::optional<long> known_norm) {
  using S = FiberedVerdict::Status;
  using R = FiberedVerdict::Reason;
  if (v.is_zero()) return {S::obstructed, R::zero};
  if (monicity_verdict(v, search_bound) == Monicity::not_monic) return {S::obstructed, R::non_monic};
  if (known_norm && *v.degree() != static_cast<long>(v.k) * *known_norm) return {S::obstructed, R::degree};
  return {};
}

DiagnosticsReport diagnose(const TorsionValue& v, int search_bound, std::optional<long> known_norm,
                           std::vector<std::string> warnings) {
  DiagnosticsReport r;
  r.torsion = v;
  r.degree = v.degree();
  r.monic = monicity_verdict(v, search_bound);
  r.norm_lower_bound = norm_lower_bound(v);
  r.known_norm = known_norm;
  r.fibered_verdict = fibered_obstruction(v, search_bound, known_norm);
  r.warnings = std::move(warnings);
  return r;
}

}  // namespace rtorsion::topology
