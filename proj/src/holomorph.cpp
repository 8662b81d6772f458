#include "leibniz/holomorph.hpp"

#include "leibniz/error.hpp"

namespace leib {

Algebra semidirect_product(const ActionData& a) {
  const std::size_t n = a.acted.dim();
  const std::size_t m = a.acting.dim();
  if (a.l.size() != m || a.r.size() != m) throw DimensionMismatch("semidirect: one l and r per acting basis element");
  if (!(a.acting.field() == a.acted.field())) throw FieldMismatch("semidirect: acting and acted fields differ");
  for (std::size_t b = 0; b < m; ++b) {
    if (a.l[b].rows() != n || a.l[b].cols() != n || a.r[b].rows() != n || a.r[b].cols() != n) {
      throw DimensionMismatch("semidirect: action matrices must be dim x dim");
    }
  }
  Algebra out(a.acted.field(), n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.set(i, j, k, a.acted.c(i, j, k));
    }
  }
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        out.set(n + b, j, k, a.l[b].at(k, j));
        out.set(j, n + b, k, a.r[b].at(k, j));
      }
    }
    for (std::size_t b2 = 0; b2 < m; ++b2) {
      for (std::size_t t = 0; t < m; ++t) out.set(n + b, n + b2, n + t, a.acting.c(b, b2, t));
    }
  }
  return out;
}

std::string to_string(HolomorphKind k) {
  switch (k) {
    case HolomorphKind::Lie: return "lie";
    case HolomorphKind::Classical: return "classical";
    case HolomorphKind::Misra: return "misra";
    case HolomorphKind::Bider: return "bider";
  }
  return "?";
}

namespace {

std::vector<std::string> holomorph_labels(const Algebra& L, std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    labels.push_back(L.labels().empty() ? "e" + std::to_string(i + 1) : L.labels()[i]);
  }
  for (std::size_t b = 0; b < m; ++b) labels.push_back("b" + std::to_string(b + 1));
  return labels;
}

HolomorphResult operator_semidirect(const Algebra& L, const OperatorSpace& S, HolomorphKind kind) {
  HolomorphResult h;
  h.kind = kind;
  h.base_dim = L.dim();
  h.acting = space_as_algebra(S);
  h.acting_d = S.basis();
  h.acting_space = S.space();
  ActionData a{h.acting, L, {}, {}};
  for (const auto& d : h.acting_d) {
    a.l.push_back(d);
    a.r.push_back(-d);
  }
  h.algebra = semidirect_product(a);
  h.algebra.set_labels(holomorph_labels(L, h.acting_d.size()));
  return h;
}

}  // namespace

HolomorphResult lie_holomorph(const Algebra& L) {
  require_right_leibniz(L, "lie_holomorph");
  return operator_semidirect(L, lie_derivation_space(L), HolomorphKind::Lie);
}

HolomorphResult classical_holomorph(const Algebra& L) {
  if (!identity_flags(L).lie) throw IdentityViolation("classical_holomorph requires a Lie algebra");
  return operator_semidirect(L, derivation_space(L), HolomorphKind::Classical);
}

HolomorphResult misra_holomorph(const Algebra& L) {
  if (!identity_flags(L).left_leibniz) {
    throw IdentityViolation("misra_holomorph requires a left Leibniz algebra");
  }
  const OperatorSpace der = derivation_space(L);
  const std::size_t n = L.dim();
  const std::size_t m = der.dim();
  HolomorphResult h;
  h.kind = HolomorphKind::Misra;
  h.base_dim = n;
  h.acting = space_as_algebra(der);
  h.acting_d = der.basis();
  h.acting_space = der.space();
  Algebra out(L.field(), n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.set(i, j, k, L.c(i, j, k));
    }
    // [(e_i, 0), (0, d')] = (0, [Ad_{e_i}, d'])
    const Matrix Ad = left_multiplication(L, unit_vector(L.field(), n, i));
    for (std::size_t b = 0; b < m; ++b) {
      const auto coords = der.coordinates(commutator(Ad, h.acting_d[b]));
      if (!coords) throw InternalInconsistency("misra_holomorph: [Ad_x, d] left Der(L)");
      for (std::size_t t = 0; t < m; ++t) out.set(i, n + b, n + t, (*coords)[t]);
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    // [(0, d), (e_j, 0)] = (d e_j, 0)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.set(n + a, j, k, h.acting_d[a].at(k, j));
    }
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t t = 0; t < m; ++t) out.set(n + a, n + b, n + t, h.acting.c(a, b, t));
    }
  }
  out.set_labels(holomorph_labels(L, m));
  h.algebra = std::move(out);
  return h;
}

HolomorphResult bider_semidirect(const Algebra& L) {
  require_right_leibniz(L, "bider_semidirect");
  const PairSpace S = biderivation_space(L);
  HolomorphResult h;
  h.kind = HolomorphKind::Bider;
  h.base_dim = L.dim();
  h.acting = space_as_algebra(S);
  h.acting_space = S.space();
  ActionData a{h.acting, L, {}, {}};
  for (const auto& p : S.basis()) {
    h.acting_d.push_back(p.d);
    h.acting_D.push_back(p.D);
    a.l.push_back(p.D);
    a.r.push_back(-p.d);
  }
  h.algebra = semidirect_product(a);
  h.algebra.set_labels(holomorph_labels(L, S.dim()));
  return h;
}

Vector embed_base(const HolomorphResult& h, std::span<const Scalar> x) {
  if (x.size() != h.base_dim) throw DimensionMismatch("embed_base: length != dim L");
  Vector v = zero_vector(h.algebra.field(), h.algebra.dim());
  std::copy(x.begin(), x.end(), v.begin());
  return v;
}

Vector embed_acting(const HolomorphResult& h, std::span<const Scalar> b) {
  if (b.size() != h.acting_dim()) throw DimensionMismatch("embed_acting: length != acting dim");
  Vector v = zero_vector(h.algebra.field(), h.algebra.dim());
  std::copy(b.begin(), b.end(), v.begin() + static_cast<std::ptrdiff_t>(h.base_dim));
  return v;
}

Vector holomorph_element(const HolomorphResult& h, std::span<const Scalar> x, const Matrix& d) {
  if (h.kind == HolomorphKind::Bider) {
    throw ConstraintViolation("holomorph_element: Bider elements are pairs; use embed_acting");
  }
  const auto coords = h.acting_space.coordinates(vectorize(d));
  if (!coords) throw ConstraintViolation("holomorph_element: operator outside the acting space");
  return add(embed_base(h, x), embed_acting(h, *coords));
}

Matrix split_i1(const HolomorphResult& h) {
  Matrix m(h.algebra.field(), h.algebra.dim(), h.base_dim);
  for (std::size_t i = 0; i < h.base_dim; ++i) m.at(i, i) = Scalar::one(h.algebra.field());
  return m;
}

Matrix split_i2(const HolomorphResult& h) {
  Matrix m(h.algebra.field(), h.algebra.dim(), h.acting_dim());
  for (std::size_t b = 0; b < h.acting_dim(); ++b) m.at(h.base_dim + b, b) = Scalar::one(h.algebra.field());
  return m;
}

Matrix split_p2(const HolomorphResult& h) {
  Matrix m(h.algebra.field(), h.acting_dim(), h.algebra.dim());
  for (std::size_t b = 0; b < h.acting_dim(); ++b) m.at(b, h.base_dim + b) = Scalar::one(h.algebra.field());
  return m;
}

}  // namespace leib
