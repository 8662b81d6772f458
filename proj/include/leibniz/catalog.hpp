#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leib::catalog {

struct ParamSpec {
  std::string name;
  bool nonzero = false;
  /// Used when the caller does not supply the parameter.
  long default_value = 2;
  std::string note;
};

using Params = std::map<std::string, Scalar>;

struct Entry {
  std::string name;
  std::string description;
  std::vector<ParamSpec> params;
  std::function<Algebra(const FieldDesc&, const Params&)> build;
};

const std::vector<Entry>& entries();
std::vector<std::string> list();

/// Looks up an entry by name ("L_6", "L6", "LA", "d1", ...). Throws UnknownEntry.
const Entry& find(const std::string& name);

/// Builds an entry. Parameter keys "alpha" and "α" are synonyms. Throws
/// UnknownEntry for unknown names or parameters and ConstraintViolation
/// when a declared constraint fails.
Algebra get(const std::string& name, const Params& params, const FieldDesc& field);
/// String-valued parameters, parsed as exact scalars over `field`.
Algebra get(const std::string& name, const std::map<std::string, std::string>& params,
            const FieldDesc& field);
Algebra get(const std::string& name, const FieldDesc& field = FieldDesc::rationals());

/// Shorthand for one-parameter entries.
Algebra get(const std::string& name, const Scalar& alpha);

struct Term {
  std::size_t i, j, k;  // 1-based
  Scalar c;
};

/// Algebra with [e_i, e_j] += c e_k for each term.
Algebra from_terms(const FieldDesc& F, std::size_t n, const std::vector<Term>& terms);

}  // namespace leib::catalog
