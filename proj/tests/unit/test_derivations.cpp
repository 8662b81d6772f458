#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/error.hpp"
#include "oracles.hpp"

using namespace leib;

namespace {
const FieldDesc Q = FieldDesc::rationals();
const FieldDesc F3 = FieldDesc::prime(3);
}  // namespace

TEST_CASE("solver dimensions match exhaustive enumeration over F_3") {
  std::vector<Algebra> sample;
  for (const char* name : {"L_A", "L_B", "L_1", "L_3", "L_4", "L_7", "L_8", "L_11", "L_12", "L_13", "lie2"}) {
    sample.push_back(catalog::get(name, F3));
  }
  for (const auto& L : oracle::random_right_leibniz(F3, 12, 17)) sample.push_back(L);
  for (const auto& L : sample) {
    const auto raw = oracle::raw(L);
    CHECK(derivation_space(L).dim() == oracle::log_p(oracle::derivations(raw).size(), 3));
    CHECK(antiderivation_space(L).dim() == oracle::log_p(oracle::antiderivations(raw).size(), 3));
    CHECK(biderivation_space(L).dim() == oracle::log_p(oracle::biderivation_count(raw), 3));
    CHECK(centers(L).lie_center.dim() == oracle::log_p(oracle::lie_center_count(raw), 3));
  }
}

TEST_CASE("solver dimensions match an independent rank computation over F_101") {
  const FieldDesc F101 = FieldDesc::prime(101);
  for (const char* name : {"L_A", "L_B", "L_1", "L_2", "L_3", "L_4", "L_5", "L_6", "L_7", "L_8", "L_9", "L_10",
                           "L_11", "L_12", "L_13", "d1", "R5", "L39", "example_3_3"}) {
    CAPTURE(name);
    const Algebra L = catalog::get(name, F101);
    const auto raw = oracle::raw(L);
    CHECK(derivation_space(L).dim() == oracle::derivation_dim_by_rank(raw));
    CHECK(antiderivation_space(L).dim() == oracle::antiderivation_dim_by_rank(raw));
  }
  // Frozen oracle value for the Dieudonne algebra.
  CHECK(oracle::derivation_dim_by_rank(oracle::raw(catalog::get("d1", F101))) == 6);
  CHECK(derivation_space(catalog::get("d1")).dim() == 6);
}

TEST_CASE("basis elements pass the direct identity checks") {
  for (const auto& [name, L] : oracle::suite()) {
    CAPTURE(name);
    for (const auto& d : derivation_space(L).basis()) CHECK(is_derivation(L, d));
    for (const auto& D : antiderivation_space(L).basis()) CHECK(is_antiderivation(L, D));
    for (const auto& p : biderivation_space(L).basis()) CHECK(is_biderivation(L, p));
  }
}

TEST_CASE("L_A spaces") {
  const Algebra L = catalog::get("L_A");
  CHECK(derivation_space(L).dim() == 2);
  CHECK(antiderivation_space(L).dim() == 2);
  CHECK(biderivation_space(L).dim() == 3);
  const OperatorSpace dl = lie_derivation_space(L);
  CHECK(dl.dim() == 1);
  CHECK(dl.contains(Matrix::elementary(Q, 2, 0, 1)));
  CHECK(inner_derivations(L).space() == dl.space());
}

TEST_CASE("inner maps") {
  const Algebra L = catalog::get("L_B");
  const Vector e2 = unit_vector(Q, 2, 1);
  // ad_{e2} = [-, e2]: e1 -> e1, e2 -> e1
  CHECK(right_multiplication(L, e2) == Matrix(Q, {{1, 1}, {0, 0}}));
  // Ad_{e2} = [e2, -]: e2 -> e1
  CHECK(left_multiplication(L, e2) == Matrix(Q, {{0, 1}, {0, 0}}));
  const OperatorPair ib = inner_biderivation(L, e2);
  CHECK(is_biderivation(L, ib));
  CHECK(inner_biderivations(L).dim() == 2);
}

TEST_CASE("Der_Lie routes agree on random samples") {
  for (const auto& L : oracle::random_right_leibniz(F3, 60, 23)) {
    CHECK(lie_derivations_by_center(L).space() == lie_derivations_by_intersection(L).space());
  }
}

TEST_CASE("Der_Lie needs right Leibniz") {
  CHECK_THROWS_AS(lie_derivation_space(opposite(catalog::get("L_B"))), IdentityViolation);
}

TEST_CASE("space_as_algebra") {
  const Algebra d1 = catalog::get("d1");
  const Algebra A = space_as_algebra(lie_derivation_space(d1));
  CHECK(A.dim() == 4);
  CHECK(identity_flags(A).lie);
  // ADer is not closed under the commutator in general.
  const Algebra lb = catalog::get("L_B");
  const OperatorSpace ader = antiderivation_space(lb);
  bool closed = true;
  for (const auto& a : ader.basis()) {
    for (const auto& b : ader.basis()) closed = closed && ader.contains(operator_bracket(a, b));
  }
  if (!closed) CHECK_THROWS_AS(space_as_algebra(ader), NotClosed);
}

TEST_CASE("operator space coordinates round trip") {
  const OperatorSpace S = derivation_space(catalog::get("L_4"));
  for (const auto& m : S.basis()) {
    const auto c = S.coordinates(m);
    REQUIRE(c);
    CHECK(S.element(*c) == m);
  }
  CHECK_FALSE(S.coordinates(Matrix::identity(Q, 3)));
}
