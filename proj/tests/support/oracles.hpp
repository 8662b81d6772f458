#pragma once

// Test-only oracles that do not go through the library's linear algebra:
// exhaustive enumeration over small prime fields, and seeded generators of
// random algebras.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leib::oracle {

/// Structure constants as residues mod p, c[(i*n+j)*n+k].
struct Raw {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::vector<std::uint32_t> c;
};

Raw raw(const Algebra& L);

/// All n x n operators (row-major residues) satisfying the rule, by
/// enumerating F_p^(n*n). Only for p^(n*n) up to a few million.
std::vector<std::vector<std::uint32_t>> derivations(const Raw& a);
std::vector<std::vector<std::uint32_t>> antiderivations(const Raw& a);
/// |Bider| from the enumerated Der and ADer sets.
std::uint64_t biderivation_count(const Raw& a);
/// |Z_Lie| by enumerating F_p^n.
std::uint64_t lie_center_count(const Raw& a);

/// dim Der and dim ADer from the rank of the defining system, assembled and
/// eliminated here with plain residue arithmetic.
std::size_t derivation_dim_by_rank(const Raw& a);
std::size_t antiderivation_dim_by_rank(const Raw& a);

/// log_p of a power of p; throws if m is not one.
std::size_t log_p(std::uint64_t m, std::uint32_t p);

/// Random sparse tensors over F that pass the right Leibniz identity.
/// Dimensions 1..max_dim, deterministic in the seed.
std::vector<Algebra> random_right_leibniz(const FieldDesc& F, std::size_t count, std::uint32_t seed,
                                          std::size_t max_dim = 3);
/// Random 2-nilpotent algebras: brackets of a generating block land in a
/// central block.
std::vector<Algebra> random_two_nilpotent(const FieldDesc& F, std::size_t count, std::uint32_t seed,
                                          std::size_t max_dim = 4);
/// Random invertible change of basis applied to catalog entries reduced to F.
std::vector<Algebra> random_catalog_conjugates(const FieldDesc& F, std::size_t count, std::uint32_t seed);

/// The catalog instances the reproduction suite uses, over Q.
std::vector<std::pair<std::string, Algebra>> suite();

}  // namespace leib::oracle
