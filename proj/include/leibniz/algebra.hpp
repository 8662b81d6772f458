#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leib {

/// A finite-dimensional algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i, j, k) e_k. Indices are 0-based internally.
///
/// No identity is required at construction; use identity_flags to find out
/// what the bracket satisfies.
class Algebra {
 public:
  Algebra() = default;
  /// The abelian (zero-bracket) algebra of dimension n.
  Algebra(const FieldDesc& field, std::size_t n);

  const FieldDesc& field() const { return field_; }
  std::size_t dim() const { return n_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * n_ + j) * n_ + k];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
  /// Sets [e_i, e_j] to v.
  void set_bracket(std::size_t i, std::size_t j, std::span<const Scalar> v);
  /// [e_i, e_j] as a coordinate vector.
  Vector bracket(std::size_t i, std::size_t j) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Structure constants only; labels are presentation.
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.sc_ == b.sc_;
  }

 private:
  FieldDesc field_;
  std::size_t n_ = 0;
  std::vector<Scalar> sc_;
  std::vector<std::string> labels_;
};

/// Bilinear extension of the structure constants.
Vector bracket_eval(const Algebra& L, std::span<const Scalar> x, std::span<const Scalar> y);

struct IdentityFlags {
  bool right_leibniz = false;
  bool left_leibniz = false;
  bool symmetric = false;
  bool antisymmetric = false;
  bool lie = false;

  friend bool operator==(const IdentityFlags&, const IdentityFlags&) = default;
};

IdentityFlags identity_flags(const Algebra& L);
/// Throws IdentityViolation naming `operation` unless L is right Leibniz.
void require_right_leibniz(const Algebra& L, const std::string& operation);

/// [x, y]^op = [y, x].
Algebra opposite(const Algebra& L);

/// Ideal generated by [e_i, e_i] and [e_i, e_j] + [e_j, e_i]. Requires right Leibniz.
Subspace leibniz_kernel(const Algebra& L);

struct Centers {
  Subspace left;       ///< [x, L] = 0
  Subspace right;      ///< [L, x] = 0
  Subspace center;     ///< left and right
  Subspace lie_center; ///< [x, y] + [y, x] = 0 for all y
};

Centers centers(const Algebra& L);

/// span{[a, b] : a in A, b in B}.
Subspace product_subspace(const Algebra& L, const Subspace& A, const Subspace& B);
/// Least two-sided ideal containing S.
Subspace ideal_closure(const Algebra& L, const Subspace& S);
bool is_ideal(const Algebra& L, const Subspace& S);
/// Quotient by an ideal, on the complement spanned by the non-pivot
/// coordinates of the ideal's canonical basis (in increasing order).
Algebra quotient(const Algebra& L, const Subspace& ideal);

enum class SeriesKind { LowerCentral, Derived };

/// Terms L^(0) = L, L^(k+1) = [L^(k), L] (lower central) or
/// L^0 = L, L^(k+1) = [L^k, L^k] (derived), listed until a term is zero or
/// equals its predecessor (the repeat is not listed).
struct SeriesReport {
  SeriesKind kind = SeriesKind::LowerCentral;
  std::vector<Subspace> terms;
  std::vector<std::size_t> dims;
  /// Nilpotent (lower central) or solvable (derived): the last term is 0.
  bool terminates = false;
  /// c with L^(c-1) != 0 and L^(c) = 0, when terminates.
  std::optional<std::size_t> length;
};

SeriesReport series(const Algebra& L, SeriesKind kind);

/// Coordinate subspace spanned by the basis vectors with the given indices.
Subspace coordinate_span(const FieldDesc& field, std::size_t n, std::span<const std::size_t> idx);

}  // namespace leib
