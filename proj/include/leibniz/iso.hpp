#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leib {

struct HomCheck {
  bool is_hom = false;
  bool is_iso = false;
};

/// f has one column per basis vector of L: the image in M's coordinates.
HomCheck verify_homomorphism(const Algebra& L, const Algebra& M, const Matrix& f);

/// The algebra with [x,y]' = P[P^-1 x, P^-1 y], so that P is an isomorphism
/// from L onto the result. Throws SingularMap.
Algebra change_of_basis(const Algebra& L, const Matrix& P);

struct Fingerprint {
  std::size_t dim = 0;
  IdentityFlags flags;
  std::vector<std::size_t> derived;
  std::vector<std::size_t> lower_central;
  std::size_t left_center = 0;
  std::size_t right_center = 0;
  std::size_t center = 0;
  std::size_t lie_center = 0;
  std::size_t leibniz_kernel = 0;
  std::size_t der = 0;
  std::size_t ader = 0;
  std::size_t bider = 0;
  std::size_t der_lie = 0;
  std::size_t inn = 0;
  std::optional<std::size_t> nilpotency_class;
  std::optional<std::size_t> solvability_class;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  std::string table() const;
  std::string json() const;
  /// Names of the fields where the two differ.
  std::vector<std::string> differences(const Fingerprint& other) const;
};

/// Requires right Leibniz.
Fingerprint fingerprint(const Algebra& L);

enum class SearchStatus { Found, Exhausted, FingerprintDiffers, Timeout };

std::string to_string(SearchStatus s);

struct SearchOptions {
  /// 0 means LEIBNIZ_WORKERS, or the OpenMP default when unset.
  int workers = 0;
  std::optional<std::chrono::milliseconds> time_limit;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Matrix> witness;
  std::uint64_t nodes = 0;
};

/// Backtracking search for an isomorphism L -> M over F_p. Images are
/// enumerated in lexicographic coordinate order inside characteristic
/// subspaces, over a basis of L adapted to its derived series. Every
/// witness is re-checked with verify_homomorphism. Throws FieldNotFinite
/// over Q; both inputs must be right Leibniz.
SearchResult search_isomorphism(const Algebra& L, const Algebra& M, const SearchOptions& opts = {});

/// Witness or nullopt (exhausted or fingerprints differ).
std::optional<Matrix> find_isomorphism(const Algebra& L, const Algebra& M);

/// Worker count from LEIBNIZ_WORKERS, else the OpenMP default.
int default_workers();

}  // namespace leib
