#include <random>

#include "doctest.h"
#include "random_objects.hpp"
#include "rtorsion/algebra/rational_function.hpp"
#include "rtorsion/errors.hpp"
#include "rtorsion/group/group_ring.hpp"
#include "rtorsion/rep/twist.hpp"

using namespace rtorsion;
using namespace rtorsion::rep;
using algebra::Domain;
using algebra::ExactMatrix;
using algebra::LaurentPolynomial;
using group::FreeWord;
using group::GroupRingElement;

namespace {

const Domain Z = Domain::integers();
const group::GroupPresentation trefoil = group::GroupPresentation::parse({"x", "y"}, {"x y x y^-1 x^-1 y^-1"});

ExactMatrix M(std::vector<std::vector<mpq_class>> rows, Domain d = Z) { return ExactMatrix::from_scalars(d, rows); }
LaurentPolynomial L(const char* s, Domain d = Z) { return LaurentPolynomial::parse(d, s); }

TwistData sl2_twist() {
  return TwistData(Z, 2, {1, 1}, {M({{1, 1}, {0, 1}}), M({{1, 0}, {-1, 1}})});
}

}  // namespace

TEST_CASE("validate_phi examples") {
  std::vector<long> ok{1, 1}, bad{1, 2}, imprimitive{2, 2};
  auto c = validate_phi(trefoil, ok);
  CHECK(c.primitive);
  CHECK(c.gcd == 1);
  CHECK_THROWS_AS(validate_phi(trefoil, bad), ValidationError);
  auto d = validate_phi(trefoil, imprimitive);
  CHECK_FALSE(d.primitive);
  CHECK(d.gcd == 2);
  std::vector<long> short_phi{1};
  CHECK_THROWS_AS(validate_phi(trefoil, short_phi), ValidationError);
}

TEST_CASE("validate_representation examples") {
  CHECK_NOTHROW(validate_representation(trefoil, sl2_twist()));
  CHECK_NOTHROW(validate_representation(trefoil, TwistData::trivial({1, 1})));
  TwistData bad(Z, 2, {1, 1}, {M({{1, 1}, {0, 1}}), ExactMatrix::identity(Z, 2)});
  CHECK_THROWS_AS(validate_representation(trefoil, bad), ValidationError);
}

TEST_CASE("twist construction errors") {
  CHECK_THROWS_AS(TwistData(Z, 2, {1, 1}, {M({{1, 1}, {0, 1}})}), DimensionError);
  CHECK_THROWS_AS(TwistData(Z, 2, {1, 1}, {M({{2, 0}, {0, 1}}), ExactMatrix::identity(Z, 2)}), ValidationError);
  CHECK_NOTHROW(TwistData(Domain::rationals(), 2, {1, 1},
                          {M({{2, 0}, {0, 1}}, Domain::rationals()), ExactMatrix::identity(Domain::rationals(), 2)}));
  CHECK_THROWS_AS(TwistData(Z, 1, {1, 1}, {M({{1, 1}, {0, 1}}), M({{1}})}), DimensionError);
}

TEST_CASE("tensor_apply examples") {
  const FreeWord x = FreeWord::generator(0);
  auto triv = TwistData::trivial({1});
  CHECK(tensor_apply(GroupRingElement(x), triv)(0, 0) == LaurentPolynomial::t(Z));
  auto one_minus_x = GroupRingElement::one() - GroupRingElement(x);
  CHECK(tensor_apply(one_minus_x, triv)(0, 0) == L("1 - t"));

  TwistData par(Z, 2, {1}, {M({{1, 1}, {0, 1}})});
  auto img = tensor_apply(GroupRingElement(x), par);
  CHECK(img(0, 0) == L("t"));
  CHECK(img(0, 1) == L("t"));
  CHECK(img(1, 0).is_zero());
  CHECK(img(1, 1) == L("t"));
}

TEST_CASE("matrix_tensor_apply examples") {
  const FreeWord x = FreeWord::generator(0);
  auto triv = TwistData::trivial({1, 1});
  std::vector<std::vector<GroupRingElement>> single{{GroupRingElement(x) - GroupRingElement::one()}};
  CHECK(matrix_tensor_apply(single, triv)(0, 0) == L("t - 1"));

  std::vector<std::vector<GroupRingElement>> id{{GroupRingElement::one(), GroupRingElement()},
                                                {GroupRingElement(), GroupRingElement::one()}};
  CHECK(matrix_tensor_apply(id, sl2_twist()) == ExactMatrix::identity(Z, 4));

  auto dx = group::fox_derivative(trefoil.relators()[0], 0);
  auto col = matrix_tensor_apply({{dx}}, triv);
  CHECK(col(0, 0) == L("1 + t^2 - t"));
}

TEST_CASE("determinant_image_spec examples") {
  CHECK(determinant_image_spec(sl2_twist()).kind == UnitSpec::Kind::plus_minus_one);
  CHECK(determinant_image_spec(TwistData::trivial({1, 1})).kind == UnitSpec::Kind::plus_minus_one);
  const Domain Q = Domain::rationals();
  TwistData three(Q, 1, {1}, {M({{3}}, Q)});
  auto spec = determinant_image_spec(three);
  CHECK(spec.kind == UnitSpec::Kind::generated_by);
  REQUIRE(spec.generators.size() == 1);
  CHECK(spec.generators[0] == 3);
}

TEST_CASE("properties: tensor_apply is a ring homomorphism") {
  std::mt19937_64 rng(31);
  auto twist = sl2_twist();
  for (int trial = 0; trial < 60; ++trial) {
    GroupRingElement a, b;
    for (int k = 0; k < 3; ++k) {
      a += GroupRingElement(testing::random_word(rng, 2, 5), testing::uniform(rng, -2, 2));
      b += GroupRingElement(testing::random_word(rng, 2, 5), testing::uniform(rng, -2, 2));
    }
    CHECK(tensor_apply(a * b, twist) == tensor_apply(a, twist) * tensor_apply(b, twist));
    CHECK(tensor_apply(a + b, twist) == tensor_apply(a, twist) + tensor_apply(b, twist));
  }
}

TEST_CASE("properties: determinant of a generator image") {
  const Domain f7 = Domain::prime_field(7);
  TwistData t(f7, 2, {2, -1}, {M({{3, 1}, {0, 1}}, f7), M({{0, 1}, {1, 0}}, f7)});
  for (std::uint32_t g = 0; g < 2; ++g) {
    auto lhs = algebra::determinant(tensor_apply(GroupRingElement(FreeWord::generator(g)), t));
    auto det_alpha = algebra::determinant(t.image(g));
    auto rhs = det_alpha * LaurentPolynomial::monomial(f7, 1, 2 * t.phi()[g]);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("properties: validation is independent of relator rotation") {
  auto relator = trefoil.relators()[0];
  for (std::size_t r = 0; r < relator.size(); ++r) {
    group::GroupPresentation rotated({"x", "y"}, {relator.rotated(r)});
    CHECK_NOTHROW(validate_representation(rotated, sl2_twist()));
    TwistData bad(Z, 2, {1, 1}, {M({{1, 1}, {0, 1}}), ExactMatrix::identity(Z, 2)});
    CHECK_THROWS_AS(validate_representation(rotated, bad), ValidationError);
    std::vector<long> ok{1, 1}, wrong{1, 2};
    CHECK_NOTHROW(validate_phi(rotated, ok));
    CHECK_THROWS_AS(validate_phi(rotated, wrong), ValidationError);
  }
}
