#pragma once

// The corner xi_{u,u} S(n,r) xi_{u,u}, u = (1, ..., r), as the group algebra
// of the extended affine Weyl group.

#include <cstdint>

#include "schur/algebra.hpp"
#include "schur/weyl.hpp"

namespace schur {

inline Tuple regular_tuple(std::size_t r) {
  Tuple u(r);
  for (std::size_t k = 0; k < r; ++k) u[k] = static_cast<std::int64_t>(k) + 1;
  return u;
}

/// xi_{u, u w}. Satisfies weyl_to_basis(w) * weyl_to_basis(w') =
/// weyl_to_basis(compose(w', w)).
inline BasisSymbol weyl_to_basis(const ExtendedWeylElement& w, const AlgebraContext& ctx) {
  if (ctx.n() < ctx.r()) throw DomainError("the group algebra corner requires n >= r");
  if (w.sigma.degree() != ctx.rank()) throw DomainError("Weyl element has the wrong degree");
  const Tuple u = regular_tuple(ctx.rank());
  return canonical(u, act(u, w, ctx.n()), ctx.n());
}

}  // namespace schur
