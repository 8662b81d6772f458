#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace leib {

enum class FieldKind { Rationals, PrimeField };

/// The field of scalars: Q or F_p for an odd prime p < 2^31.
///
/// Characteristic 2 is rejected at construction: every construction in this
/// library (polarization of the Leibniz kernel, the Lie-center, the
/// derivation/anti-derivation split) divides by 2 somewhere.
class FieldDesc {
 public:
  /// Defaults to Q.
  FieldDesc() = default;

  static FieldDesc rationals() { return FieldDesc{}; }
  /// Throws InvalidField unless p is an odd prime below 2^31.
  static FieldDesc prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  /// Characteristic; 0 for Q.
  std::uint64_t p() const { return p_; }
  bool is_finite() const { return kind_ == FieldKind::PrimeField; }

  /// "Q" or "F_p".
  std::string name() const;

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;

 private:
  FieldDesc(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  FieldKind kind_ = FieldKind::Rationals;
  std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldDesc& f);

/// Exact field element. Rationals are kept reduced with positive denominator
/// (GMP canonical form), residues in [0, p). Mixing fields throws
/// FieldMismatch; there is no implicit coercion.
class Scalar {
 public:
  /// Zero of Q.
  Scalar() : value_(mpq_class(0)) {}
  Scalar(const FieldDesc& field, long value);
  Scalar(const FieldDesc& field, const mpq_class& value);

  static Scalar zero(const FieldDesc& field) { return Scalar(field, 0L); }
  static Scalar one(const FieldDesc& field) { return Scalar(field, 1L); }
  /// num/den mapped into the field; throws if den is not invertible there.
  static Scalar fraction(const FieldDesc& field, long num, long den);

  /// Strict parser for the file format: over Q "a" or "a/b" in lowest terms
  /// with b > 1; over F_p a decimal residue in [0, p). Throws ParseError.
  static Scalar parse(const FieldDesc& field, std::string_view text);

  const FieldDesc& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value (Q only).
  const mpq_class& rational() const;
  /// Residue (F_p only).
  std::uint64_t residue() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  /// this -= a * b, the elimination inner step.
  void sub_mul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, long b) { return a += Scalar(a.field_, b); }
  friend Scalar operator-(Scalar a, long b) { return a -= Scalar(a.field_, b); }
  friend Scalar operator*(Scalar a, long b) { return a *= Scalar(a.field_, b); }
  friend Scalar operator/(Scalar a, long b) { return a /= Scalar(a.field_, b); }
  friend Scalar operator*(long a, Scalar b) { return b *= Scalar(b.field_, a); }
  friend Scalar operator-(long a, const Scalar& b) { return Scalar(b.field_, a) - b; }

  /// Structural equality; scalars over different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, long b) { return a == Scalar(a.field_, b); }

  /// Canonical text: "a" or "a/b" over Q, the residue over F_p.
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o) const;

  FieldDesc field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace leib
