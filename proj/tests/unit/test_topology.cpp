#include <random>

#include "doctest.h"
#include "random_objects.hpp"
#include "rtorsion/errors.hpp"
#include "rtorsion/topology/diagnostics.hpp"
#include "rtorsion/topology/mapping_torus.hpp"
#include "rtorsion/torsion/wada.hpp"

using namespace rtorsion;
using namespace rtorsion::topology;
using algebra::Domain;
using algebra::ExactMatrix;
using algebra::LaurentPolynomial;
using algebra::RationalFunction;
using rep::TwistData;
using rep::UnitSpec;

namespace {

const Domain Z = Domain::integers();
const Domain Q = Domain::rationals();

LaurentPolynomial L(const char* s, Domain d = Z) { return LaurentPolynomial::parse(d, s); }

TorsionValue value(const char* num, const char* den, Domain ring = Z, std::size_t k = 1, UnitSpec units = {}) {
  TorsionValue v;
  v.value = RationalFunction::normalize(L(num, ring), L(den, ring));
  v.ring = ring;
  v.k = k;
  v.units = units;
  return v;
}

TorsionValue zero() {
  TorsionValue v;
  v.zero_reason = torsion::ZeroReason::not_acyclic;
  return v;
}

MonodromyData mono(std::vector<std::string> gens, std::map<std::string, std::string> images) {
  return MonodromyData::parse(std::move(gens), images);
}

}  // namespace

TEST_CASE("monicity_verdict examples") {
  CHECK(monicity_verdict(value("t^2 - t + 1", "t - 1")) == Monicity::monic);
  CHECK(monicity_verdict(value("2*t^2 - 3*t + 2", "t - 1")) == Monicity::not_monic);
  UnitSpec three{UnitSpec::Kind::generated_by, {3}};
  CHECK(monicity_verdict(value("3*t^2 + 3", "t - 1", Q, 1, three)) == Monicity::monic);
  CHECK(monicity_verdict(value("3*t^2 + 3", "t - 1", Q)) == Monicity::not_monic);
  CHECK(monicity_verdict(value("3*t^2 + 3", "t - 1", Z)) == Monicity::not_monic);
  CHECK(monicity_verdict(zero()) == Monicity::not_monic);
}

TEST_CASE("monicity_verdict: unit searches") {
  UnitSpec gens{UnitSpec::Kind::generated_by, {2, 3}};
  // 12 = 2^2 * 3 needs three factors.
  CHECK(monicity_verdict(value("12*t + 12", "1", Q, 1, gens), 3) == Monicity::monic);
  CHECK(monicity_verdict(value("12*t + 12", "1", Q, 1, gens), 2) == Monicity::unknown);
  CHECK(monicity_verdict(value("1/6*t + 1/6", "1", Q, 1, gens), 2) == Monicity::monic);
  UnitSpec unknown{UnitSpec::Kind::unknown, {}};
  CHECK(monicity_verdict(value("5*t + 5", "1", Q, 1, unknown)) == Monicity::unknown);
  CHECK(monicity_verdict(value("5*t + 10", "1", Q, 1, unknown)) == Monicity::not_monic);

  // Over F_7, ±<2> is all of F_7^×, while ±<6> = {1, 6}.
  const Domain f7 = Domain::prime_field(7);
  UnitSpec two{UnitSpec::Kind::generated_by, {2}};
  CHECK(monicity_verdict(value("3*t + 3", "1", f7, 1, two), 0) == Monicity::monic);
  UnitSpec six{UnitSpec::Kind::generated_by, {6}};
  CHECK(monicity_verdict(value("3*t + 3", "1", f7, 1, six)) == Monicity::not_monic);
  CHECK(monicity_verdict(value("3*t + 1", "1", f7, 1, two)) == Monicity::not_monic);
}

TEST_CASE("properties: monicity is invariant under allowed units") {
  std::mt19937_64 rng(51);
  UnitSpec gens{UnitSpec::Kind::generated_by, {2}};
  for (int trial = 0; trial < 100; ++trial) {
    auto num = testing::random_laurent(rng, Q, 3);
    auto den = testing::random_laurent(rng, Q, 2);
    if (num.is_zero() || den.is_zero()) continue;
    TorsionValue v;
    v.value = RationalFunction::normalize(num, den);
    v.ring = Q;
    v.units = gens;
    TorsionValue w = v;
    auto unit = LaurentPolynomial::monomial(Q, testing::uniform(rng, 0, 1) ? 2 : mpq_class(-1, 2),
                                            testing::uniform(rng, -3, 3));
    w.value = RationalFunction::normalize(unit * num, den);
    CHECK(monicity_verdict(v) == monicity_verdict(w));
    TorsionValue u = v;
    u.value = RationalFunction::normalize(num * LaurentPolynomial::constant(Q, 2), den * LaurentPolynomial::constant(Q, 4));
    CHECK(monicity_verdict(v) == monicity_verdict(u));
  }
}

TEST_CASE("norm_lower_bound examples") {
  CHECK(norm_lower_bound(value("t^2 - t + 1", "t - 1")) == 1);
  CHECK_FALSE(norm_lower_bound(zero()).has_value());
  CHECK(norm_lower_bound(value("t^3 + 1", "1", Z, 2)) == 2);
  CHECK(norm_lower_bound(value("t^4 + 1", "1", Z, 2)) == 2);
  CHECK(norm_lower_bound(value("1", "t - 1")) == -1);
}

TEST_CASE("fibered_obstruction examples") {
  auto v52 = value("2*t^2 - 3*t + 2", "t - 1");
  CHECK(fibered_obstruction(v52) == FiberedVerdict{FiberedVerdict::Status::obstructed, FiberedVerdict::Reason::non_monic});
  auto tref = value("t^2 - t + 1", "t - 1");
  CHECK_FALSE(fibered_obstruction(tref, default_search_bound, 1).obstructed());
  CHECK(fibered_obstruction(zero()) == FiberedVerdict{FiberedVerdict::Status::obstructed, FiberedVerdict::Reason::zero});
  CHECK(fibered_obstruction(tref, default_search_bound, 2) ==
        FiberedVerdict{FiberedVerdict::Status::obstructed, FiberedVerdict::Reason::degree});
  auto report = diagnose(tref, default_search_bound, 1, {"note"});
  CHECK(report.degree == 1);
  CHECK(report.monic == Monicity::monic);
  CHECK(report.norm_lower_bound == 1);
  CHECK(report.warnings.size() == 1);
}

TEST_CASE("mapping_torus_presentation examples") {
  auto m = mono({"a", "b"}, {{"a", "b"}, {"b", "a^-1 b"}});
  auto torus = mapping_torus_presentation(m);
  CHECK(torus.presentation.generators() == std::vector<std::string>{"a", "b", "mu"});
  REQUIRE(torus.presentation.relator_count() == 2);
  CHECK(torus.presentation.format_word(torus.presentation.relators()[0]) == "mu a mu^-1 b^-1");
  CHECK(torus.presentation.format_word(torus.presentation.relators()[1]) == "mu b mu^-1 b^-1 a");
  CHECK(torus.phi == std::vector<long>{0, 0, 1});
  CHECK(torus.presentation.deficiency() == 1);

  auto id = mapping_torus_presentation(mono({"a", "b"}, {{"a", "a"}, {"b", "b"}}));
  CHECK(id.presentation.format_word(id.presentation.relators()[1]) == "mu b mu^-1 b^-1");
}

TEST_CASE("monodromy validation") {
  CHECK_THROWS_AS(mono({"a", "b"}, {{"a", "a^2"}, {"b", "b"}}), ValidationError);
  CHECK_THROWS_AS(mono({"a", "b"}, {{"a", "a b"}, {"b", "a b"}}), ValidationError);
  CHECK_THROWS_AS(mono({"a"}, {{"a", "a"}}), ValidationError);
  CHECK_THROWS_AS(mono({"a", "b"}, {{"a", "a"}}), InputError);
  CHECK_THROWS_AS(mono({"a", "b"}, {{"a", "a"}, {"b", "c"}}), InputError);
  CHECK_THROWS_AS(MonodromyData::parse({"a", "mu"}, {{"a", "a"}, {"mu", "mu"}}, "mu"), InputError);
  CHECK(mono({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "c a"}}).fiber_norm() == 2);
}

TEST_CASE("fibered_torsion_formula examples") {
  auto m = mono({"a", "b"}, {{"a", "b"}, {"b", "a^-1 b"}});
  auto triv = TwistData::trivial(mapping_torus_presentation(m).phi);
  auto v = fibered_torsion_formula(m, triv);
  REQUIRE(v.value);
  CHECK(*v.value == RationalFunction::normalize(L("t^2 - t + 1"), L("t - 1")));

  auto id = mono({"a", "b"}, {{"a", "a"}, {"b", "b"}});
  auto vi = fibered_torsion_formula(id, TwistData::trivial({0, 0, 1}));
  REQUIRE(vi.value);
  CHECK(*vi.value == RationalFunction::from_polynomial(L("t - 1")));

  auto torus = mapping_torus_presentation(m);
  CHECK(*torsion::wada_torsion(torus.presentation, triv).value == *v.value);
  CHECK_THROWS_AS(fibered_torsion_formula(m, TwistData::trivial({1, 0, 1})), ValidationError);
}

TEST_CASE("properties: fibered mapping tori have monic torsion of degree k*(n-1)") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 15; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    auto m = testing::random_monodromy(rng, n, 5);
    auto phi = mapping_torus_presentation(m).phi;
    auto v = fibered_torsion_formula(m, TwistData::trivial(phi));
    REQUIRE(v.value);
    CHECK(monicity_verdict(v) == Monicity::monic);
    CHECK(v.degree() == m.fiber_norm());
    CHECK_FALSE(fibered_obstruction(v, default_search_bound, m.fiber_norm()).obstructed());
  }
}
