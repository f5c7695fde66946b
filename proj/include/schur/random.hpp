#pragma once

// Reproducible sampling for property suites.
//
// The generator is the 64-bit linear congruential generator
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
// seeded with the raw seed value. A draw in [lo, hi] takes the high 32 bits
// h of the next state and returns lo + floor(h * (hi - lo + 1) / 2^32).
// Every sampler below is built only from these draws, in the order written,
// so the same seed yields the same cases on every platform.

#include <cstdint>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/weyl.hpp"

namespace schur {

class Lcg {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ull;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ull;

  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }

  /// Inclusive range; hi - lo must be below 2^32.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw DomainError("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span > (std::uint64_t{1} << 32)) throw DomainError("sampling range too wide");
    const std::uint64_t high = next() >> 32;
    return lo + static_cast<std::int64_t>((high * span) >> 32);
  }

 private:
  std::uint64_t state_;
};

inline Tuple random_tuple(Lcg& rng, std::size_t r, std::int64_t lo, std::int64_t hi) {
  Tuple t(r);
  for (auto& v : t) v = rng.uniform(lo, hi);
  return t;
}

/// Uniform tuple in I(n,r), sorted.
inline Tuple random_top(Lcg& rng, const AlgebraContext& ctx) {
  return sorted(random_tuple(rng, ctx.rank(), 1, ctx.n()));
}

/// Canonical symbol with the given top and bottom entries drawn uniformly
/// from [1 - bound, n + bound].
inline BasisSymbol random_symbol_with_top(Lcg& rng, const Tuple& top, const AlgebraContext& ctx,
                                          std::int64_t bound) {
  return canonical(top, random_tuple(rng, ctx.rank(), 1 - bound, ctx.n() + bound), ctx.n());
}

inline BasisSymbol random_symbol(Lcg& rng, const AlgebraContext& ctx, std::int64_t bound) {
  const Tuple top = random_top(rng, ctx);
  return random_symbol_with_top(rng, top, ctx, bound);
}

/// A symbol whose top matches the middle residues of `left`, so that
/// left * result is generally nonzero.
inline BasisSymbol random_composable(Lcg& rng, const BasisSymbol& left, const AlgebraContext& ctx,
                                     std::int64_t bound) {
  return random_symbol_with_top(rng, sorted(left.middle()), ctx, bound);
}

inline Permutation random_permutation(Lcg& rng, std::size_t r) {
  std::vector<int> images(r);
  for (std::size_t k = 0; k < r; ++k) images[k] = static_cast<int>(k);
  for (std::size_t k = r; k > 1; --k) {
    const auto m = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(k) - 1));
    std::swap(images[k - 1], images[m]);
  }
  return Permutation::from_zero_based(std::move(images));
}

inline ExtendedWeylElement random_weyl(Lcg& rng, std::size_t r, std::int64_t shift_bound) {
  Permutation sigma = random_permutation(rng, r);
  return {std::move(sigma), random_tuple(rng, r, -shift_bound, shift_bound)};
}

/// Random set partition via random block labels.
inline YoungSubgroup random_young(Lcg& rng, std::size_t r) {
  std::vector<int> labels(r);
  for (auto& l : labels) l = static_cast<int>(rng.uniform(0, static_cast<std::int64_t>(r) - 1));
  return YoungSubgroup::from_labels(labels);
}

/// Random element built from `terms` random symbols with small
/// integer coefficients in [-3, 3].
inline AlgebraElement random_element(Lcg& rng, const AlgebraContext& ctx, std::size_t terms,
                                     std::int64_t bound) {
  AlgebraElement e(ctx);
  for (std::size_t t = 0; t < terms; ++t) {
    const BasisSymbol x = random_symbol(rng, ctx, bound);
    e.add_term(x, Scalar::from_integer(ctx.field(), rng.uniform(-3, 3)));
  }
  return e;
}

}  // namespace schur
