#pragma once

#include <string>
#include <vector>

#include "leibniz/derivations.hpp"

namespace leib {

/// An acting algebra B together with left and right action matrices on L,
/// one of each per basis element of B.
struct ActionData {
  Algebra acting;
  Algebra acted;
  std::vector<Matrix> l;
  std::vector<Matrix> r;
};

/// L (+) B with [(x,b),(y,b')] = ([x,y] + l_b(y) + r_b'(x), [b,b']).
/// Basis: L first, then B. No identity is guaranteed.
Algebra semidirect_product(const ActionData& a);

enum class HolomorphKind { Lie, Classical, Misra, Bider };

std::string to_string(HolomorphKind k);

struct HolomorphResult {
  HolomorphKind kind = HolomorphKind::Lie;
  Algebra algebra;
  /// dim L; coordinates [0, base_dim) are L, the rest the acting space.
  std::size_t base_dim = 0;
  /// Acting space in its canonical basis, as algebra and as operators.
  Algebra acting;
  std::vector<Matrix> acting_d;
  /// Second components, Bider only.
  std::vector<Matrix> acting_D;
  /// The acting space as vectorized operators (or pairs).
  Subspace acting_space;

  std::size_t acting_dim() const { return algebra.dim() - base_dim; }
};

/// L semidirect Der_Lie(L). Requires right Leibniz.
HolomorphResult lie_holomorph(const Algebra& L);
/// L semidirect Der(L) for a Lie algebra L.
HolomorphResult classical_holomorph(const Algebra& L);
/// L x Der(L) with [(x,d),(y,d')] = ([x,y] + d(y), [Ad_x,d'] + [d,d']).
/// Requires left Leibniz.
HolomorphResult misra_holomorph(const Algebra& L);
/// L semidirect Bider(L) with l_(d,D) = D, r_(d,D) = -d. Requires right Leibniz.
HolomorphResult bider_semidirect(const Algebra& L);

/// Coordinates of (x, 0) and (0, b) in the result.
Vector embed_base(const HolomorphResult& h, std::span<const Scalar> x);
Vector embed_acting(const HolomorphResult& h, std::span<const Scalar> b);
/// Coordinates of (x, d) for d in the acting operator space.
/// Throws ConstraintViolation if d is outside it, or for Bider results.
Vector holomorph_element(const HolomorphResult& h, std::span<const Scalar> x, const Matrix& d);

/// Canonical split extension L -> hol -> acting, with section i2.
Matrix split_i1(const HolomorphResult& h);
Matrix split_i2(const HolomorphResult& h);
Matrix split_p2(const HolomorphResult& h);

}  // namespace leib
