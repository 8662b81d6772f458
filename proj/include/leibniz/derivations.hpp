#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leib {

// Operators are n x n matrices acting on coordinate columns: column j of d is
// d(e_j), and d * d' means "apply d' first". Spaces of operators live in
// F^(n*n) through row-major vectorization; pairs (d, D) are vec(d) followed by
// vec(D).

Vector vectorize(const Matrix& m);

/// ad_x = [-, x] as a matrix.
Matrix right_multiplication(const Algebra& L, std::span<const Scalar> x);
/// Ad_x = [x, -] as a matrix.
Matrix left_multiplication(const Algebra& L, std::span<const Scalar> x);

/// Direct checks of the defining identities on all basis pairs.
bool is_derivation(const Algebra& L, const Matrix& d);
bool is_antiderivation(const Algebra& L, const Matrix& D);

struct OperatorPair {
  Matrix d;
  Matrix D;
  friend bool operator==(const OperatorPair&, const OperatorPair&) = default;
};

Vector vectorize(const OperatorPair& p);
/// d a derivation, D an anti-derivation and [x, d y] = [x, D y].
bool is_biderivation(const Algebra& L, const OperatorPair& p);

enum class OperatorRole { Der, ADer, DerLie, Inn };
enum class PairRole { Bider, InnerBider };

std::string to_string(OperatorRole r);
std::string to_string(PairRole r);

/// A linear space of n x n operators with its canonical basis.
class OperatorSpace {
 public:
  OperatorSpace() = default;
  OperatorSpace(std::size_t n, Subspace space, OperatorRole role);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return space_.dim(); }
  OperatorRole role() const { return role_; }
  const Subspace& space() const { return space_; }
  const FieldDesc& field() const { return space_.field(); }

  std::vector<Matrix> basis() const;
  bool contains(const Matrix& m) const;
  std::optional<Vector> coordinates(const Matrix& m) const;
  Matrix element(std::span<const Scalar> coords) const;

  friend bool operator==(const OperatorSpace&, const OperatorSpace&) = default;

 private:
  std::size_t n_ = 0;
  Subspace space_;
  OperatorRole role_ = OperatorRole::Der;
};

/// A linear space of operator pairs (d, D).
class PairSpace {
 public:
  PairSpace() = default;
  PairSpace(std::size_t n, Subspace space, PairRole role);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return space_.dim(); }
  PairRole role() const { return role_; }
  const Subspace& space() const { return space_; }
  const FieldDesc& field() const { return space_.field(); }

  std::vector<OperatorPair> basis() const;
  bool contains(const OperatorPair& p) const;
  std::optional<Vector> coordinates(const OperatorPair& p) const;
  OperatorPair element(std::span<const Scalar> coords) const;

  friend bool operator==(const PairSpace&, const PairSpace&) = default;

 private:
  std::size_t n_ = 0;
  Subspace space_;
  PairRole role_ = PairRole::Bider;
};

/// Der(L): d[x,y] = [dx,y] + [x,dy]. Any bilinear product is accepted.
OperatorSpace derivation_space(const Algebra& L);
/// ADer(L): D[x,y] = [Dx,y] - [Dy,x].
OperatorSpace antiderivation_space(const Algebra& L);
/// Bider(L): pairs (d, D) in Der x ADer with [x, d y] = [x, D y].
PairSpace biderivation_space(const Algebra& L);

/// Der_Lie(L) = {d in Der : Im d in Z_Lie(L)}, cross-checked against
/// Der(L) and ADer(L) intersected. Throws InternalInconsistency if the two
/// computations differ. Requires right Leibniz.
OperatorSpace lie_derivation_space(const Algebra& L);
/// The two routes separately, for tests and reports.
OperatorSpace lie_derivations_by_center(const Algebra& L);
OperatorSpace lie_derivations_by_intersection(const Algebra& L);

/// Inn(L) = span{ad_{e_i}}. Requires right Leibniz.
OperatorSpace inner_derivations(const Algebra& L);
/// span{(-ad_{e_i}, Ad_{e_i})}. Requires right Leibniz.
PairSpace inner_biderivations(const Algebra& L);
/// (-ad_x, Ad_x).
OperatorPair inner_biderivation(const Algebra& L, std::span<const Scalar> x);

Matrix operator_bracket(const Matrix& d1, const Matrix& d2);
/// [(d,D),(d',D')] = (d d' - d' d, D d' - d' D).
OperatorPair pair_bracket(const OperatorPair& a, const OperatorPair& b);
/// d . D = D d - d D.
Matrix der_action_on_ader(const Matrix& d, const Matrix& D);

/// Structure constants of the bracket in the space's canonical basis.
/// Throws NotClosed if a bracket leaves the space.
Algebra space_as_algebra(const OperatorSpace& S);
Algebra space_as_algebra(const PairSpace& S);

}  // namespace leib
