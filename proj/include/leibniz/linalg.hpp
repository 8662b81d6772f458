#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leibniz/field.hpp"

namespace leib {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldDesc& field, std::size_t n);
/// i-th standard basis vector of F^n (0-based).
Vector unit_vector(const FieldDesc& field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& s, std::span<const Scalar> v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldDesc& field, std::size_t rows, std::size_t cols);
  /// Integer-valued convenience constructor.
  Matrix(const FieldDesc& field, std::initializer_list<std::initializer_list<long>> rows);
  Matrix(const FieldDesc& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(const FieldDesc& field, std::size_t n);
  /// Rows are the given vectors (all of length `cols`).
  static Matrix from_rows(const FieldDesc& field, std::size_t cols, std::span<const Vector> rows);
  /// Columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const FieldDesc& field, std::size_t rows, std::span<const Vector> cols);
  /// Inverse of row-major vectorization.
  static Matrix reshape(const FieldDesc& field, std::size_t rows, std::size_t cols,
                        std::span<const Scalar> flat);
  /// Elementary matrix with 1 at (i, j), 0-based.
  static Matrix elementary(const FieldDesc& field, std::size_t n, std::size_t i, std::size_t j);

  const FieldDesc& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<Scalar> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  /// Row-major flattening.
  const std::vector<Scalar>& entries() const { return entries_; }

  bool is_zero() const;
  Matrix transpose() const;
  /// Throws SingularMap if not square and invertible.
  Matrix inverse() const;
  Vector apply(std::span<const Scalar> v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  FieldDesc field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// a*b - b*a.
Matrix commutator(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Uses the OpenMP elimination kernel; the result is
/// identical to kernels::rref_serial (RREF is unique).
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

class Subspace;

/// {v : m v = 0}.
Subspace nullspace(const Matrix& m);
/// A solution of m x = rhs with every free variable zero, or nullopt.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> rhs);

/// A subspace of F^n stored by its reduced row echelon basis (no zero rows).
/// Equal subspaces have equal representations, so == is subspace equality.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const FieldDesc& field, std::size_t ambient_dim);
  static Subspace full(const FieldDesc& field, std::size_t ambient_dim);
  static Subspace span(const FieldDesc& field, std::size_t ambient_dim,
                       std::span<const Vector> vectors);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);

  const FieldDesc& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(std::span<const Scalar> v) const;
  /// Coordinates of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  /// Combination of basis vectors with the given coefficients.
  Vector combine(std::span<const Scalar> coords) const;
  /// Reduce v modulo this subspace: zero out the pivot coordinates.
  Vector reduce(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

  std::string to_string() const;

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, std::span<const Scalar> v);
/// a is contained in b.
bool subspace_leq(const Subspace& a, const Subspace& b);

std::string vector_to_string(std::span<const Scalar> v);

}  // namespace leib
