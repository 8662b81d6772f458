#include "leibniz/field.hpp"

#include <charconv>
#include <ostream>

#include "leibniz/error.hpp"

namespace leib {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t reduce(long v, std::uint64_t p) {
  const auto sp = static_cast<long long>(p);
  long long r = static_cast<long long>(v) % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

bool is_decimal(std::string_view s, bool allow_sign) {
  if (!s.empty() && s.front() == '-' && allow_sign) s.remove_prefix(1);
  if (s.empty()) return false;
  if (s.size() > 1 && s.front() == '0') return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

FieldDesc FieldDesc::prime(std::uint64_t p) {
  if (p == 2) {
    throw InvalidField("characteristic 2 is not supported (char(F) != 2 is required)");
  }
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InvalidField("F_p requires an odd prime p < 2^31, got " + std::to_string(p));
  }
  return FieldDesc(FieldKind::PrimeField, p);
}

std::string FieldDesc::name() const {
  return is_finite() ? "F_" + std::to_string(p_) : std::string("Q");
}

std::ostream& operator<<(std::ostream& os, const FieldDesc& f) { return os << f.name(); }

Scalar::Scalar(const FieldDesc& field, long value) : field_(field) {
  if (field.is_finite()) {
    value_ = reduce(value, field.p());
  } else {
    value_ = mpq_class(value);
  }
}

Scalar::Scalar(const FieldDesc& field, const mpq_class& value) : field_(field) {
  if (!field.is_finite()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
    return;
  }
  const std::uint64_t den = reduce(value.get_den(), field.p());
  if (den == 0) {
    throw FieldMismatch("denominator " + value.get_den().get_str() + " is not invertible in " +
                        field.name());
  }
  const std::uint64_t num = reduce(value.get_num(), field.p());
  value_ = num * mod_pow(den, field.p() - 2, field.p()) % field.p();
}

Scalar Scalar::fraction(const FieldDesc& field, long num, long den) {
  if (den == 0) throw Error("zero denominator");
  return Scalar(field, mpq_class(num, den));
}

Scalar Scalar::parse(const FieldDesc& field, std::string_view text) {
  const std::string shown(text);
  if (field.is_finite()) {
    if (!is_decimal(text, false)) {
      throw ParseError("invalid residue \"" + shown + "\": expected an integer in [0, " +
                       std::to_string(field.p()) + ")");
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || v >= field.p()) {
      throw ParseError("unreduced residue \"" + shown + "\": expected an integer in [0, " +
                       std::to_string(field.p()) + ")");
    }
    return Scalar(field, static_cast<long>(v));
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_decimal(num, true) || num == "-0") {
    throw ParseError("invalid rational \"" + shown + "\"");
  }
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(mpz_class(std::string(num)));
  } else {
    const std::string_view den = text.substr(slash + 1);
    if (!is_decimal(den, false) || den == "0" || den == "1") {
      throw ParseError("invalid rational \"" + shown + "\": denominator must be an integer > 1");
    }
    const mpz_class n{std::string(num)}, d{std::string(den)};
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) throw ParseError("unreduced rational \"" + shown + "\"");
    q = mpq_class(n, d);
  }
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (field_.is_finite()) throw FieldMismatch("rational() called on an element of " + field_.name());
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_finite()) throw FieldMismatch("residue() called on an element of Q");
  return std::get<std::uint64_t>(value_);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch("arithmetic between " + field_.name() + " and " + o.field_.name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar out = *this;
  if (field_.is_finite()) {
    out.value_ = mod_pow(residue(), field_.p() - 2, field_.p());
  } else {
    out.value_ = mpq_class(1) / rational();
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_finite()) {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + o.residue()) % field_.p();
  } else {
    std::get<mpq_class>(value_) += o.rational();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_finite()) {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + field_.p() - o.residue()) % field_.p();
  } else {
    std::get<mpq_class>(value_) -= o.rational();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_finite()) {
    auto& r = std::get<std::uint64_t>(value_);
    r = r * o.residue() % field_.p();
  } else {
    std::get<mpq_class>(value_) *= o.rational();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  if (field_.is_finite()) {
    const std::uint64_t p = field_.p();
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + p - a.residue() * b.residue() % p) % p;
  } else {
    auto& q = std::get<mpq_class>(value_);
    q -= a.rational() * b.rational();
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_finite()) {
    auto& r = std::get<std::uint64_t>(out.value_);
    r = (field_.p() - r) % field_.p();
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_finite()) return std::to_string(residue());
  return rational().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace leib
