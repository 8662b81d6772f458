#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "leibniz/error.hpp"
#include "leibniz/holomorph.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace leib;

namespace {
const FieldDesc Q = FieldDesc::rationals();
}

TEST_CASE("hol_Lie(L_A) brackets") {
  const Algebra L = catalog::get("L_A");
  const HolomorphResult h = lie_holomorph(L);
  REQUIRE(h.algebra.dim() == 3);
  const Vector t1 = embed_base(h, unit_vector(Q, 2, 0));
  const Vector t2 = embed_base(h, unit_vector(Q, 2, 1));
  const Vector o12 = holomorph_element(h, zero_vector(Q, 2), Matrix::elementary(Q, 2, 0, 1));
  CHECK(bracket_eval(h.algebra, t2, t2) == t1);
  CHECK(bracket_eval(h.algebra, o12, t2) == t1);
  CHECK(bracket_eval(h.algebra, t2, o12) == scale(Scalar(Q, -1), t1));
  CHECK(is_zero(bracket_eval(h.algebra, o12, o12)));
  CHECK(is_zero(bracket_eval(h.algebra, t1, t2)));
}

TEST_CASE("holomorph soundness on the suite") {
  for (const auto& [name, L] : oracle::suite()) {
    CAPTURE(name);
    CHECK(props::holomorph_soundness(L).empty());
  }
}

TEST_CASE("holomorph_element rejects operators outside the space") {
  const HolomorphResult h = lie_holomorph(catalog::get("L_A"));
  CHECK_THROWS_AS(holomorph_element(h, zero_vector(Q, 2), Matrix::identity(Q, 2)), ConstraintViolation);
}

TEST_CASE("split extension maps") {
  const HolomorphResult h = lie_holomorph(catalog::get("L_4"));
  const Matrix i1 = split_i1(h), i2 = split_i2(h), p2 = split_p2(h);
  CHECK(i1.rows() == 5);
  CHECK(i1.cols() == 3);
  CHECK((p2 * i2) == Matrix::identity(Q, 2));
  CHECK((p2 * i1).is_zero());
}

TEST_CASE("Misra and classical holomorphs of the 2-dim Lie algebra") {
  const Algebra L = catalog::get("lie2");
  const HolomorphResult m = misra_holomorph(L);
  CHECK(m.algebra.dim() == 4);
  CHECK_FALSE(identity_flags(m.algebra).antisymmetric);
  CHECK_FALSE(is_ideal(m.algebra, Subspace::row_space(split_i1(m).transpose())));
  const HolomorphResult c = classical_holomorph(L);
  CHECK(identity_flags(c.algebra).lie);
  CHECK(is_ideal(c.algebra, Subspace::row_space(split_i1(c).transpose())));
}

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS(classical_holomorph(catalog::get("L_A")), IdentityViolation);
  CHECK_THROWS_AS(misra_holomorph(catalog::get("L_B")), IdentityViolation);
  CHECK_THROWS_AS(lie_holomorph(opposite(catalog::get("L_B"))), IdentityViolation);
  CHECK(misra_holomorph(opposite(catalog::get("L_B"))).algebra.dim() > 2);
}

TEST_CASE("Bider semidirect product of L_B") {
  const HolomorphResult b = bider_semidirect(catalog::get("L_B"));
  CHECK(b.algebra.dim() == 4);
  CHECK(identity_flags(b.algebra).right_leibniz);
}

TEST_CASE("semidirect product with zero actions is the direct sum") {
  const Algebra L = catalog::get("L_A");
  const Algebra B = catalog::get("lie2");
  ActionData a{B, L, {Matrix(Q, 2, 2), Matrix(Q, 2, 2)}, {Matrix(Q, 2, 2), Matrix(Q, 2, 2)}};
  const Algebra S = semidirect_product(a);
  CHECK(S.dim() == 4);
  CHECK(S.bracket(1, 1) == Vector{Scalar(Q, 1), Scalar(Q, 0), Scalar(Q, 0), Scalar(Q, 0)});
  CHECK(S.bracket(2, 3) == Vector{Scalar(Q, 0), Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, 0)});
  CHECK(is_zero(S.bracket(1, 2)));
}
