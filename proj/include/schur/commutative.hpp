#pragma once

// The commutative subalgebra B_i spanned by xi_{i, i + n eps}.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/laurent_form.hpp"

namespace schur {

/// Factors xi_{i, i + n theta_s(eps)}, one per value s in 1..n occurring in i
/// whose block of eps is nonzero. i must be weakly increasing.
inline std::vector<BasisSymbol> b_subalgebra_factorize(const Tuple& i, const Tuple& eps,
                                                       const AlgebraContext& ctx) {
  weight(i, ctx);
  if (eps.size() != ctx.rank()) throw DomainError("shift has the wrong length");
  if (!std::is_sorted(i.begin(), i.end())) throw DomainError("i must be weakly increasing");
  std::vector<BasisSymbol> factors;
  std::size_t start = 0;
  while (start < i.size()) {
    std::size_t end = start;
    while (end < i.size() && i[end] == i[start]) ++end;
    Tuple theta(i.size(), 0);
    bool nonzero = false;
    for (std::size_t k = start; k < end; ++k) {
      theta[k] = eps[k];
      nonzero = nonzero || eps[k] != 0;
    }
    if (nonzero) factors.push_back(diagonal_symbol(i, theta, ctx));
    start = end;
  }
  return factors;
}

/// Product of the factors, starting from xi_{i,i}.
inline AlgebraElement multiply_factors(const Tuple& i, const std::vector<BasisSymbol>& factors,
                                       const AlgebraContext& ctx) {
  AlgebraElement acc = idempotent(i, ctx);
  for (const auto& f : factors) acc = acc * AlgebraElement::basis(f, ctx);
  return acc;
}

/// For a non-diagonal xi_{i,b} in the corner of i, the shift
/// eps0 = t(1, 2, ..., r) with t = 10 * max(1, max |eps|) such that xi_{i,b}
/// does not commute with xi_{i, i + n eps0}.
inline Tuple maximality_witness(const BasisSymbol& x) {
  const Tuple middle = x.middle();
  if (sorted(middle) != x.top()) throw DomainError("symbol is not in the corner of its top");
  if (x.is_diagonal()) throw DomainError("diagonal symbols lie in B_i");
  std::int64_t largest = 1;
  for (std::int64_t v : x.shift()) largest = std::max(largest, v < 0 ? -v : v);
  const std::int64_t t = detail::checked_mul(10, largest);
  Tuple eps0(x.rank());
  for (std::size_t k = 0; k < eps0.size(); ++k) {
    eps0[k] = detail::checked_mul(t, static_cast<std::int64_t>(k) + 1);
  }
  return eps0;
}

inline bool commute(const AlgebraElement& a, const AlgebraElement& b) { return a * b == b * a; }

}  // namespace schur
