#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "leibniz/error.hpp"
#include "leibniz/kernels.hpp"
#include "oracles.hpp"

using namespace leib;

namespace {
const FieldDesc Q = FieldDesc::rationals();
Subspace span1(std::size_t n, std::size_t i) { return Subspace::span(Q, n, std::vector<Vector>{unit_vector(Q, n, i)}); }
}  // namespace

TEST_CASE("identity flags") {
  const auto la = identity_flags(catalog::get("L_A"));
  CHECK(la.right_leibniz);
  CHECK(la.left_leibniz);
  CHECK(la.symmetric);
  CHECK_FALSE(la.lie);
  const auto lb = identity_flags(catalog::get("L_B"));
  CHECK(lb.right_leibniz);
  CHECK_FALSE(lb.left_leibniz);
  const auto sl2 = identity_flags(catalog::get("sl2"));
  CHECK(sl2.lie);
  CHECK(sl2.antisymmetric);
  Algebra bad(Q, 2);
  bad.set(0, 0, 1, Scalar(Q, 1));
  bad.set(1, 1, 0, Scalar(Q, 1));
  CHECK_FALSE(identity_flags(bad).right_leibniz);
  CHECK_THROWS_AS(require_right_leibniz(bad, "test"), IdentityViolation);
}

TEST_CASE("opposite swaps the sides") {
  const Algebra lb = catalog::get("L_B");
  const Algebra op = opposite(lb);
  CHECK(op.bracket(1, 0) == lb.bracket(0, 1));
  CHECK(identity_flags(op).left_leibniz);
  CHECK(opposite(op) == lb);
}

TEST_CASE("centers and Leibniz kernel of L_A and L_B") {
  const Algebra la = catalog::get("L_A");
  CHECK(centers(la).center == span1(2, 0));
  CHECK(centers(la).lie_center == span1(2, 0));
  CHECK(leibniz_kernel(la) == span1(2, 0));
  const Algebra lb = catalog::get("L_B");
  CHECK(centers(lb).center.dim() == 0);
  CHECK(centers(lb).right == span1(2, 0));
  CHECK(leibniz_kernel(lb) == span1(2, 0));
}

TEST_CASE("series") {
  const auto lc = series(catalog::get("L_A"), SeriesKind::LowerCentral);
  CHECK(lc.dims == std::vector<std::size_t>{2, 1, 0});
  CHECK(lc.terminates);
  CHECK(lc.length == 2);
  const auto d = series(catalog::get("L_B"), SeriesKind::LowerCentral);
  CHECK_FALSE(d.terminates);
  CHECK(d.dims == std::vector<std::size_t>{2, 1});
  const auto ds = series(catalog::get("L_B"), SeriesKind::Derived);
  CHECK(ds.terminates);
}

TEST_CASE("ideals and quotients") {
  const Algebra d1 = catalog::get("d1");
  const Subspace z = span1(4, 3);
  CHECK(is_ideal(d1, z));
  const Algebra q = quotient(d1, z);
  CHECK(q.dim() == 3);
  CHECK(identity_flags(q).lie);
  CHECK(ideal_closure(d1, span1(4, 2)).dim() == 2);
  CHECK_FALSE(is_ideal(d1, span1(4, 2)));
}

TEST_CASE("bracket evaluation is bilinear") {
  const Algebra L = catalog::get("L_13");
  const Vector x{Scalar(Q, 1), Scalar(Q, 2), Scalar(Q, 3)};
  const Vector y{Scalar(Q, -1), Scalar(Q, 0), Scalar(Q, 2)};
  const Vector lhs = bracket_eval(L, add(x, y), y);
  CHECK(lhs == add(bracket_eval(L, x, y), bracket_eval(L, y, y)));
}

TEST_CASE("serial and parallel identity kernels agree") {
  const auto samples = oracle::random_right_leibniz(FieldDesc::prime(3), 40, 5);
  for (const auto& L : samples) {
    for (auto id : {kernels::Identity::RightLeibniz, kernels::Identity::LeftLeibniz}) {
      CHECK(kernels::check_identity_serial(L, id) == kernels::check_identity_parallel(L, id));
    }
  }
}

TEST_CASE("the quotient by Leib is Lie") {
  for (const auto& [name, L] : oracle::suite()) {
    CAPTURE(name);
    const Subspace leib = leibniz_kernel(L);
    CHECK(is_ideal(L, leib));
    CHECK(identity_flags(quotient(L, leib)).lie);
    CHECK((leib.dim() == 0) == identity_flags(L).lie);
  }
}
