#pragma once

#include <stdexcept>
#include <string>

namespace leib {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic or linear algebra between values over different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A field descriptor that is not Q or F_p with p an odd prime.
class InvalidField : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a Leibniz/Lie identity received an algebra
/// that does not satisfy it.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

/// Catalog parameter constraint (e.g. alpha != 0) not satisfied.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

class UnknownEntry : public Error {
 public:
  using Error::Error;
};

/// A space expected to be closed under its bracket is not.
class NotClosed : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same object disagree. Always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class SingularMap : public Error {
 public:
  using Error::Error;
};

/// Isomorphism search requested over an infinite field.
class FieldNotFinite : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. The message carries the location.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace leib
