#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace leib;

TEST_CASE("structural properties on the suite") {
  for (const auto& [name, L] : oracle::suite()) {
    CAPTURE(name);
    CHECK(props::structural_violations(L).empty());
    CHECK(props::lie_derivation_routes(L).empty());
  }
}

TEST_CASE("structural properties on random F_3 samples") {
  const FieldDesc F3 = FieldDesc::prime(3);
  for (const auto& L : oracle::random_right_leibniz(F3, 30, 41)) CHECK(props::structural_violations(L).empty());
  for (const auto& L : oracle::random_catalog_conjugates(F3, 20, 43)) {
    CHECK(props::structural_violations(L).empty());
  }
}

TEST_CASE("Inn lies in Der_Lie for 2-nilpotent algebras") {
  for (const auto& L : oracle::random_two_nilpotent(FieldDesc::prime(3), 30, 47)) {
    CHECK(props::inner_in_lie_derivations(L).empty());
  }
  CHECK(props::inner_in_lie_derivations(catalog::get("d1")).empty());
}
