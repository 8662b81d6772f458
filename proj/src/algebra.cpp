#include "leibniz/algebra.hpp"

#include "leibniz/error.hpp"
#include "leibniz/kernels.hpp"

namespace leib {

Algebra::Algebra(const FieldDesc& field, std::size_t n)
    : field_(field), n_(n), sc_(n * n * n, Scalar::zero(field)) {}

void Algebra::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  if (i >= n_ || j >= n_ || k >= n_) throw DimensionMismatch("structure constant index out of range");
  if (!(v.field() == field_)) throw FieldMismatch("structure constant over " + v.field().name());
  sc_[(i * n_ + j) * n_ + k] = v;
}

void Algebra::set_bracket(std::size_t i, std::size_t j, std::span<const Scalar> v) {
  if (v.size() != n_) throw DimensionMismatch("bracket value has wrong length");
  for (std::size_t k = 0; k < n_; ++k) set(i, j, k, v[k]);
}

Vector Algebra::bracket(std::size_t i, std::size_t j) const {
  const auto* first = sc_.data() + (i * n_ + j) * n_;
  return Vector(first, first + n_);
}

void Algebra::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) throw DimensionMismatch("label count != dim");
  labels_ = std::move(labels);
}

Vector bracket_eval(const Algebra& L, std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket_eval: vector length != dim");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i].field() == L.field()) || !(y[i].field() == L.field())) {
      throw FieldMismatch("bracket_eval: vector not over " + L.field().name());
    }
  }
  Vector out = zero_vector(L.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!L.c(i, j, k).is_zero()) out[k] += xy * L.c(i, j, k);
      }
    }
  }
  return out;
}

IdentityFlags identity_flags(const Algebra& L) {
  IdentityFlags f;
  f.right_leibniz = kernels::check_identity_parallel(L, kernels::Identity::RightLeibniz);
  f.left_leibniz = kernels::check_identity_parallel(L, kernels::Identity::LeftLeibniz);
  f.symmetric = f.right_leibniz && f.left_leibniz;
  f.antisymmetric = true;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n && f.antisymmetric; ++i) {
    for (std::size_t j = 0; j < n && f.antisymmetric; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!(L.c(i, j, k) == -L.c(j, i, k))) {
          f.antisymmetric = false;
          break;
        }
      }
    }
  }
  f.lie = f.right_leibniz && f.antisymmetric;
  return f;
}

void require_right_leibniz(const Algebra& L, const std::string& operation) {
  if (!kernels::check_identity_parallel(L, kernels::Identity::RightLeibniz)) {
    throw IdentityViolation(operation + " requires a right Leibniz algebra");
  }
}

Algebra opposite(const Algebra& L) {
  const std::size_t n = L.dim();
  Algebra out(L.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.set(i, j, k, L.c(j, i, k));
    }
  }
  out.set_labels(L.labels());
  return out;
}

Subspace leibniz_kernel(const Algebra& L) {
  require_right_leibniz(L, "leibniz_kernel");
  const std::size_t n = L.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(L.bracket(i, i));
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(add(L.bracket(i, j), L.bracket(j, i)));
  }
  return ideal_closure(L, Subspace::span(L.field(), n, gens));
}

Centers centers(const Algebra& L) {
  const std::size_t n = L.dim();
  const FieldDesc& f = L.field();
  // Unknown x (n coordinates); one equation per (j, k).
  Matrix left(f, n * n, n), right(f, n * n, n), lie(f, n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t row = j * n + k;
      for (std::size_t i = 0; i < n; ++i) {
        left.at(row, i) = L.c(i, j, k);
        right.at(row, i) = L.c(j, i, k);
        lie.at(row, i) = L.c(i, j, k) + L.c(j, i, k);
      }
    }
  }
  Centers c;
  c.left = nullspace(left);
  c.right = nullspace(right);
  c.center = subspace_intersect(c.left, c.right);
  c.lie_center = nullspace(lie);
  return c;
}

Subspace product_subspace(const Algebra& L, const Subspace& A, const Subspace& B) {
  const std::size_t n = L.dim();
  if (A.ambient_dim() != n || B.ambient_dim() != n) {
    throw DimensionMismatch("product_subspace: ambient dimension != dim");
  }
  std::vector<Vector> prods;
  for (const auto& a : A.basis_vectors()) {
    for (const auto& b : B.basis_vectors()) prods.push_back(bracket_eval(L, a, b));
  }
  return Subspace::span(L.field(), n, prods);
}

Subspace ideal_closure(const Algebra& L, const Subspace& S) {
  const Subspace full = Subspace::full(L.field(), L.dim());
  Subspace cur = S;
  while (true) {
    Subspace next = subspace_sum(cur, subspace_sum(product_subspace(L, cur, full),
                                                   product_subspace(L, full, cur)));
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

bool is_ideal(const Algebra& L, const Subspace& S) {
  const Subspace full = Subspace::full(L.field(), L.dim());
  return subspace_leq(product_subspace(L, S, full), S) &&
         subspace_leq(product_subspace(L, full, S), S);
}

Algebra quotient(const Algebra& L, const Subspace& ideal) {
  if (!is_ideal(L, ideal)) throw Error("quotient: subspace is not an ideal");
  const std::size_t n = L.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_pivot[i]) comp.push_back(i);
  }
  Algebra Q(L.field(), comp.size());
  for (std::size_t a = 0; a < comp.size(); ++a) {
    for (std::size_t b = 0; b < comp.size(); ++b) {
      const Vector r = ideal.reduce(L.bracket(comp[a], comp[b]));
      for (std::size_t t = 0; t < comp.size(); ++t) Q.set(a, b, t, r[comp[t]]);
    }
  }
  return Q;
}

SeriesReport series(const Algebra& L, SeriesKind kind) {
  require_right_leibniz(L, "series");
  SeriesReport rep;
  rep.kind = kind;
  const Subspace full = Subspace::full(L.field(), L.dim());
  rep.terms.push_back(full);
  while (rep.terms.back().dim() != 0) {
    const Subspace& cur = rep.terms.back();
    Subspace next = kind == SeriesKind::LowerCentral ? product_subspace(L, cur, full)
                                                     : product_subspace(L, cur, cur);
    if (next.dim() == cur.dim()) break;
    rep.terms.push_back(std::move(next));
  }
  for (const auto& t : rep.terms) rep.dims.push_back(t.dim());
  rep.terminates = rep.dims.back() == 0;
  if (rep.terminates) rep.length = rep.dims.size() - 1;
  return rep;
}

Subspace coordinate_span(const FieldDesc& field, std::size_t n, std::span<const std::size_t> idx) {
  std::vector<Vector> vs;
  for (auto i : idx) vs.push_back(unit_vector(field, n, i));
  return Subspace::span(field, n, vs);
}

}  // namespace leib
