#include "leibniz/derivations.hpp"

#include "leibniz/error.hpp"

namespace leib {

namespace {

enum class Rule { Derivation, AntiDerivation };

// Writes the n^3 equations of the (anti-)derivation rule for the operator
// whose n^2 unknowns start at column `offset` of `sys`, rows from `row0`.
void add_rule(const Algebra& L, Rule rule, Matrix& sys, std::size_t row0, std::size_t offset) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = row0 + (i * n + j) * n + k;
        for (std::size_t m = 0; m < n; ++m) {
          // X [e_i, e_j], k-th coordinate
          sys.at(row, offset + k * n + m) += L.c(i, j, m);
          // [X e_i, e_j]
          sys.at(row, offset + m * n + i) -= L.c(m, j, k);
          if (rule == Rule::Derivation) {
            // [e_i, X e_j]
            sys.at(row, offset + m * n + j) -= L.c(i, m, k);
          } else {
            // -[X e_j, e_i]
            sys.at(row, offset + m * n + j) += L.c(m, i, k);
          }
        }
      }
    }
  }
}

Subspace rule_space(const Algebra& L, Rule rule) {
  const std::size_t n = L.dim();
  Matrix sys(L.field(), n * n * n, n * n);
  add_rule(L, rule, sys, 0, 0);
  return nullspace(sys);
}

bool rule_holds(const Algebra& L, const Matrix& X, Rule rule) {
  const std::size_t n = L.dim();
  if (X.rows() != n || X.cols() != n) throw DimensionMismatch("operator size != dim");
  std::vector<Vector> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(X.column(j));
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = unit_vector(L.field(), n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = unit_vector(L.field(), n, j);
      const Vector lhs = X.apply(L.bracket(i, j));
      const Vector rhs = rule == Rule::Derivation
                             ? add(bracket_eval(L, images[i], ej), bracket_eval(L, ei, images[j]))
                             : sub(bracket_eval(L, images[i], ej), bracket_eval(L, images[j], ei));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace

Vector vectorize(const Matrix& m) { return m.entries(); }

Vector vectorize(const OperatorPair& p) {
  Vector v = p.d.entries();
  v.insert(v.end(), p.D.entries().begin(), p.D.entries().end());
  return v;
}

Matrix right_multiplication(const Algebra& L, std::span<const Scalar> x) {
  const std::size_t n = L.dim();
  std::vector<Vector> cols;
  for (std::size_t b = 0; b < n; ++b) cols.push_back(bracket_eval(L, unit_vector(L.field(), n, b), x));
  return Matrix::from_columns(L.field(), n, cols);
}

Matrix left_multiplication(const Algebra& L, std::span<const Scalar> x) {
  const std::size_t n = L.dim();
  std::vector<Vector> cols;
  for (std::size_t b = 0; b < n; ++b) cols.push_back(bracket_eval(L, x, unit_vector(L.field(), n, b)));
  return Matrix::from_columns(L.field(), n, cols);
}

bool is_derivation(const Algebra& L, const Matrix& d) { return rule_holds(L, d, Rule::Derivation); }

bool is_antiderivation(const Algebra& L, const Matrix& D) {
  return rule_holds(L, D, Rule::AntiDerivation);
}

bool is_biderivation(const Algebra& L, const OperatorPair& p) {
  if (!is_derivation(L, p.d) || !is_antiderivation(L, p.D)) return false;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = unit_vector(L.field(), n, i);
    for (std::size_t j = 0; j < n; ++j) {
      if (bracket_eval(L, ei, p.d.column(j)) != bracket_eval(L, ei, p.D.column(j))) return false;
    }
  }
  return true;
}

std::string to_string(OperatorRole r) {
  switch (r) {
    case OperatorRole::Der: return "Der";
    case OperatorRole::ADer: return "ADer";
    case OperatorRole::DerLie: return "Der_Lie";
    case OperatorRole::Inn: return "Inn";
  }
  return "?";
}

std::string to_string(PairRole r) { return r == PairRole::Bider ? "Bider" : "InnerBider"; }

OperatorSpace::OperatorSpace(std::size_t n, Subspace space, OperatorRole role)
    : n_(n), space_(std::move(space)), role_(role) {
  if (space_.ambient_dim() != n * n) throw DimensionMismatch("operator space ambient != n^2");
}

std::vector<Matrix> OperatorSpace::basis() const {
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < dim(); ++r) {
    out.push_back(Matrix::reshape(field(), n_, n_, space_.basis().row(r)));
  }
  return out;
}

bool OperatorSpace::contains(const Matrix& m) const { return space_.contains(vectorize(m)); }

std::optional<Vector> OperatorSpace::coordinates(const Matrix& m) const {
  return space_.coordinates(vectorize(m));
}

Matrix OperatorSpace::element(std::span<const Scalar> coords) const {
  const Vector flat = space_.combine(coords);
  return Matrix::reshape(field(), n_, n_, flat);
}

PairSpace::PairSpace(std::size_t n, Subspace space, PairRole role)
    : n_(n), space_(std::move(space)), role_(role) {
  if (space_.ambient_dim() != 2 * n * n) throw DimensionMismatch("pair space ambient != 2n^2");
}

namespace {

OperatorPair split_pair(const FieldDesc& f, std::size_t n, std::span<const Scalar> flat) {
  return {Matrix::reshape(f, n, n, flat.first(n * n)), Matrix::reshape(f, n, n, flat.subspan(n * n))};
}

}  // namespace

std::vector<OperatorPair> PairSpace::basis() const {
  std::vector<OperatorPair> out;
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(split_pair(field(), n_, space_.basis().row(r)));
  return out;
}

bool PairSpace::contains(const OperatorPair& p) const { return space_.contains(vectorize(p)); }

std::optional<Vector> PairSpace::coordinates(const OperatorPair& p) const {
  return space_.coordinates(vectorize(p));
}

OperatorPair PairSpace::element(std::span<const Scalar> coords) const {
  const Vector flat = space_.combine(coords);
  return split_pair(field(), n_, flat);
}

OperatorSpace derivation_space(const Algebra& L) {
  return {L.dim(), rule_space(L, Rule::Derivation), OperatorRole::Der};
}

OperatorSpace antiderivation_space(const Algebra& L) {
  return {L.dim(), rule_space(L, Rule::AntiDerivation), OperatorRole::ADer};
}

PairSpace biderivation_space(const Algebra& L) {
  const std::size_t n = L.dim();
  const std::size_t nn = n * n;
  const std::size_t n3 = nn * n;
  Matrix sys(L.field(), 3 * n3, 2 * nn);
  add_rule(L, Rule::Derivation, sys, 0, 0);
  add_rule(L, Rule::AntiDerivation, sys, n3, nn);
  // [e_i, (d - D) e_j] = 0, k-th coordinate.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = 2 * n3 + (i * n + j) * n + k;
        for (std::size_t m = 0; m < n; ++m) {
          sys.at(row, m * n + j) += L.c(i, m, k);
          sys.at(row, nn + m * n + j) -= L.c(i, m, k);
        }
      }
    }
  }
  return {n, nullspace(sys), PairRole::Bider};
}

OperatorSpace lie_derivations_by_center(const Algebra& L) {
  require_right_leibniz(L, "lie_derivation_space");
  const std::size_t n = L.dim();
  const std::size_t n3 = n * n * n;
  Matrix sys(L.field(), 2 * n3, n * n);
  add_rule(L, Rule::Derivation, sys, 0, 0);
  // d(e_b) in Z_Lie: sum_a d_ab ([e_a, e_j] + [e_j, e_a])_k = 0.
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = n3 + (b * n + j) * n + k;
        for (std::size_t a = 0; a < n; ++a) sys.at(row, a * n + b) = L.c(a, j, k) + L.c(j, a, k);
      }
    }
  }
  return {n, nullspace(sys), OperatorRole::DerLie};
}

OperatorSpace lie_derivations_by_intersection(const Algebra& L) {
  require_right_leibniz(L, "lie_derivation_space");
  return {L.dim(),
          subspace_intersect(derivation_space(L).space(), antiderivation_space(L).space()),
          OperatorRole::DerLie};
}

OperatorSpace lie_derivation_space(const Algebra& L) {
  OperatorSpace by_center = lie_derivations_by_center(L);
  const OperatorSpace by_intersection = lie_derivations_by_intersection(L);
  if (!(by_center.space() == by_intersection.space())) {
    throw InternalInconsistency("Der_Lie: image-in-Lie-center and Der/ADer intersection disagree");
  }
  return by_center;
}

OperatorSpace inner_derivations(const Algebra& L) {
  require_right_leibniz(L, "inner_derivations");
  const std::size_t n = L.dim();
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < n; ++i) {
    vs.push_back(vectorize(right_multiplication(L, unit_vector(L.field(), n, i))));
  }
  return {n, Subspace::span(L.field(), n * n, vs), OperatorRole::Inn};
}

OperatorPair inner_biderivation(const Algebra& L, std::span<const Scalar> x) {
  return {-right_multiplication(L, x), left_multiplication(L, x)};
}

PairSpace inner_biderivations(const Algebra& L) {
  require_right_leibniz(L, "inner_biderivations");
  const std::size_t n = L.dim();
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < n; ++i) {
    vs.push_back(vectorize(inner_biderivation(L, unit_vector(L.field(), n, i))));
  }
  return {n, Subspace::span(L.field(), 2 * n * n, vs), PairRole::InnerBider};
}

Matrix operator_bracket(const Matrix& d1, const Matrix& d2) { return commutator(d1, d2); }

OperatorPair pair_bracket(const OperatorPair& a, const OperatorPair& b) {
  return {a.d * b.d - b.d * a.d, a.D * b.d - b.d * a.D};
}

Matrix der_action_on_ader(const Matrix& d, const Matrix& D) { return D * d - d * D; }

Algebra space_as_algebra(const OperatorSpace& S) {
  const auto basis = S.basis();
  const std::size_t m = basis.size();
  Algebra out(S.field(), m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto coords = S.coordinates(operator_bracket(basis[a], basis[b]));
      if (!coords) throw NotClosed(to_string(S.role()) + " is not closed under the commutator");
      out.set_bracket(a, b, *coords);
    }
  }
  return out;
}

Algebra space_as_algebra(const PairSpace& S) {
  const auto basis = S.basis();
  const std::size_t m = basis.size();
  Algebra out(S.field(), m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto coords = S.coordinates(pair_bracket(basis[a], basis[b]));
      if (!coords) throw NotClosed(to_string(S.role()) + " is not closed under the pair bracket");
      out.set_bracket(a, b, *coords);
    }
  }
  return out;
}

}  // namespace leib
