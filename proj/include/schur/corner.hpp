#pragma once

// Corner algebras xi_N S(n,r) xi_N and the direct-summand identity
// xi_{i,j} xi_{j,i} = [Sigma_i : Sigma_j] xi_{i,i}.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "schur/algebra.hpp"

namespace schur {

namespace detail {

inline std::vector<std::int64_t> normalize_subset(std::vector<std::int64_t> values,
                                                  const AlgebraContext& ctx) {
  if (values.empty()) throw DomainError("value subset must be nonempty");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.front() < 1 || values.back() > ctx.n()) {
    throw DomainError("value subset must lie in 1..n");
  }
  return values;
}

}  // namespace detail

/// xi_N: the sum of xi_{i,i} over weakly increasing i with entries in N.
inline AlgebraElement subset_idempotent(const std::vector<std::int64_t>& values,
                                        const AlgebraContext& ctx) {
  const auto subset = detail::normalize_subset(values, ctx);
  AlgebraElement e(ctx);
  for (const auto& i : weakly_increasing_tuples(subset, ctx.rank())) {
    e.add_term(canonical(i, i, ctx.n()), Scalar::one(ctx.field()));
  }
  return e;
}

/// Relabels an element of the corner xi_N S(n,r) xi_N into S(#N, r) through
/// the order-preserving bijection N -> {1..#N}:
/// xi_{i, j + n eps} -> xi_{i', j' + #N eps}.
inline AlgebraElement restrict_to_subset(const std::vector<std::int64_t>& values,
                                         const AlgebraElement& e) {
  const AlgebraContext& ctx = e.context();
  const auto subset = detail::normalize_subset(values, ctx);
  const auto s = static_cast<std::int64_t>(subset.size());
  std::vector<std::int64_t> relabel(static_cast<std::size_t>(ctx.n()) + 1, 0);
  for (std::size_t k = 0; k < subset.size(); ++k) {
    relabel[static_cast<std::size_t>(subset[k])] = static_cast<std::int64_t>(k) + 1;
  }
  const AlgebraContext target(s, ctx.r(), ctx.field());
  AlgebraElement out(target);
  for (const auto& [x, c] : e.terms()) {
    const Tuple j = x.middle();
    const Tuple eps = x.shift();
    Tuple top(x.rank()), middle(x.rank());
    for (std::size_t k = 0; k < x.rank(); ++k) {
      top[k] = relabel[static_cast<std::size_t>(x.top()[k])];
      middle[k] = relabel[static_cast<std::size_t>(j[k])];
      if (top[k] == 0 || middle[k] == 0) {
        throw DomainError("element is not supported in the xi_N corner");
      }
    }
    out.add_term(canonical(top, fold(middle, eps, s), s), c);
  }
  return out;
}

struct SummandData {
  mpz_class index;       // [Sigma_i : Sigma_j]
  bool identity_holds;   // xi_{i,j} xi_{j,i} == index * xi_{i,i}
  bool split_over_field; // char K does not divide index
};

/// Requires Sigma_j <= Sigma_i, i.e. stabilizer(j) refines stabilizer(i).
inline SummandData summand_data(const Tuple& i, const Tuple& j, const AlgebraContext& ctx) {
  weight(i, ctx);
  weight(j, ctx);
  const YoungSubgroup si = stabilizer_of(i);
  const YoungSubgroup sj = stabilizer_of(j);
  if (!sj.refines(si)) throw DomainError("Sigma_j is not contained in Sigma_i");

  SummandData out;
  out.index = subgroup_index(si, sj);
  AlgebraElement expected = idempotent(i, ctx);
  expected *= Scalar::from_integer(ctx.field(), out.index);
  out.identity_holds = symbol_element(i, j, ctx) * symbol_element(j, i, ctx) == expected;
  const std::uint64_t p = ctx.field().characteristic();
  out.split_over_field = p == 0 || mpz_class(out.index % mpz_class(std::to_string(p))) != 0;
  return out;
}

}  // namespace schur
