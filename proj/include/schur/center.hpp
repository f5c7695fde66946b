#pragma once

// Central elements c_eps and the isomorphism Z -> K[t_1..t_{r-1}, t_r^{+-1}].

#include <cstdint>

#include "schur/algebra.hpp"
#include "schur/laurent_form.hpp"
#include "schur/weyl.hpp"

namespace schur {

/// c_eps = sum over weakly increasing i and sigma in
/// Sigma_eps \ Sigma_r / Sigma_i of xi_{i, i + n eps sigma}.
inline AlgebraElement center_element(const Tuple& eps, const AlgebraContext& ctx) {
  if (eps.size() != ctx.rank()) throw DomainError("shift has the wrong length");
  const YoungSubgroup full = YoungSubgroup::full(ctx.rank());
  const YoungSubgroup se = stabilizer_of(eps);
  AlgebraElement c(ctx);
  for (const auto& i : weakly_increasing_tuples(value_range(ctx.n()), ctx.rank())) {
    for (const auto& sigma : double_cosets(se, full, stabilizer_of(i))) {
      c.add_term(diagonal_symbol(i, permute(eps, sigma), ctx), Scalar::one(ctx.field()));
    }
  }
  return c;
}

/// laurent_normal_form(c * xi_{1..1, 1..1}); c must be supported on diagonal
/// symbols.
inline LaurentPoly center_normal_form(const AlgebraElement& c) {
  for (const auto& [x, coeff] : c.terms()) {
    if (!x.is_diagonal()) {
      throw DomainError("symbol " + format_symbol(x) + " is not of the form xi_{i, i + n eps}");
    }
  }
  return laurent_normal_form(c * idempotent(ones(c.context().rank()), c.context()));
}

}  // namespace schur
