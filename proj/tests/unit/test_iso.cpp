#include <doctest.h>

#include <cstdlib>

#include "leibniz/catalog.hpp"
#include "leibniz/error.hpp"
#include "leibniz/iso.hpp"
#include "oracles.hpp"

using namespace leib;

namespace {
const FieldDesc Q = FieldDesc::rationals();
const FieldDesc F3 = FieldDesc::prime(3);
const FieldDesc F5 = FieldDesc::prime(5);
}  // namespace

TEST_CASE("verify_homomorphism") {
  const Algebra L = catalog::get("L_4");
  CHECK(verify_homomorphism(L, L, Matrix::identity(Q, 3)).is_iso);
  const Matrix zero(Q, 3, 3);
  const HomCheck z = verify_homomorphism(L, L, zero);
  CHECK(z.is_hom);
  CHECK_FALSE(z.is_iso);
  CHECK_FALSE(verify_homomorphism(L, L, Matrix(Q, {{1, 0, 0}, {0, 2, 0}, {0, 0, 1}})).is_hom);
}

TEST_CASE("change of basis gives an isomorphic algebra") {
  const Algebra L = catalog::get("L_13");
  const Matrix P(Q, {{1, 1, 0}, {0, 1, 2}, {1, 0, 1}});
  const Algebra M = change_of_basis(L, P);
  CHECK(verify_homomorphism(L, M, P).is_iso);
  CHECK(fingerprint(L).differences(fingerprint(M)).empty());
}

TEST_CASE("fingerprints") {
  const Fingerprint a = fingerprint(catalog::get("L_4"));
  CHECK(a.dim == 3);
  CHECK(a.der == 4);
  CHECK(a.table().find("dim") != std::string::npos);
  CHECK(a.json().find("\"der\"") != std::string::npos);
  const Fingerprint b = fingerprint(catalog::get("L_7"));
  CHECK_FALSE(a.differences(b).empty());
}

TEST_CASE("search: -1 a square over F_5 but not over F_3") {
  const auto found = search_isomorphism(catalog::get("L_4", F5), catalog::get("L_5", Scalar(F5, 4)));
  REQUIRE(found.status == SearchStatus::Found);
  CHECK(verify_homomorphism(catalog::get("L_4", F5), catalog::get("L_5", Scalar(F5, 4)), *found.witness).is_iso);
  CHECK(search_isomorphism(catalog::get("L_4", F5), catalog::get("L_5", Scalar(F5, 2))).status ==
        SearchStatus::Exhausted);
  CHECK_FALSE(find_isomorphism(catalog::get("L_4", F3), catalog::get("L_5", Scalar(F3, 2))));
}

TEST_CASE("search finds random conjugates") {
  const auto samples = oracle::random_catalog_conjugates(F3, 25, 99);
  std::size_t k = 0;
  for (const auto& name : catalog::list()) {
    Algebra L;
    try {
      L = catalog::get(name, F3);
    } catch (const Error&) {
      continue;
    }
    if (L.dim() > 3) continue;
    for (const auto& M : samples) {
      if (M.dim() != L.dim() || !fingerprint(L).differences(fingerprint(M)).empty()) continue;
      const auto r = search_isomorphism(L, M);
      CHECK(r.status != SearchStatus::Timeout);
      if (r.witness) CHECK(verify_homomorphism(L, M, *r.witness).is_iso);
      ++k;
      break;
    }
  }
  CHECK(k > 0);
  for (const auto& M : samples) {
    if (M.dim() > 3) continue;
    CHECK(search_isomorphism(M, M).status == SearchStatus::Found);
  }
}

TEST_CASE("witness does not depend on the worker count") {
  const Algebra L = catalog::get("L_4", F5);
  const Algebra M = catalog::get("L_5", Scalar(F5, 4));
  SearchOptions one, two;
  one.workers = 1;
  two.workers = 2;
  const auto a = search_isomorphism(L, M, one);
  const auto b = search_isomorphism(L, M, two);
  REQUIRE(a.witness);
  REQUIRE(b.witness);
  CHECK(*a.witness == *b.witness);
}

TEST_CASE("search needs a finite field") {
  CHECK_THROWS_AS(search_isomorphism(catalog::get("L_4"), catalog::get("L_7")), FieldNotFinite);
}

TEST_CASE("fingerprint precheck") {
  const auto r = search_isomorphism(catalog::get("L_4", F3), catalog::get("L_7", F3));
  CHECK(r.status == SearchStatus::FingerprintDiffers);
  CHECK(r.nodes == 0);
}
