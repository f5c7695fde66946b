#pragma once

// The commutative corner S(1...1) = xi_{1..1} S(n,r) xi_{1..1} and its
// identification with K[t_1, ..., t_{r-1}, t_r, t_r^{-1}], plus the r = 1
// matrix form M_n (x) K[t, t^{-1}].

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "schur/algebra.hpp"
#include "schur/laurent.hpp"

namespace schur {

/// xi_{i, i + n eps}.
inline BasisSymbol diagonal_symbol(const Tuple& i, const Tuple& eps, const AlgebraContext& ctx) {
  return canonical(i, fold(i, eps, ctx.n()), ctx.n());
}

inline AlgebraElement diagonal_element(const Tuple& i, const Tuple& eps, const AlgebraContext& ctx) {
  return AlgebraElement::basis(diagonal_symbol(i, eps, ctx), ctx);
}

inline Tuple ones(std::size_t r) { return Tuple(r, 1); }

/// t_k = xi_{1..1, 1..1 + n(e_1 + ... + e_k)}, k in 1..r.
inline AlgebraElement t_generator(std::size_t k, const AlgebraContext& ctx) {
  if (k < 1 || k > ctx.rank()) throw DomainError("generator index out of range 1..r");
  Tuple eps(ctx.rank(), 0);
  std::fill(eps.begin(), eps.begin() + static_cast<std::ptrdiff_t>(k), 1);
  return diagonal_element(ones(ctx.rank()), eps, ctx);
}

/// t_r^{-1} = xi_{1..1, 1..1 - n(1,...,1)}.
inline AlgebraElement t_r_inverse(const AlgebraContext& ctx) {
  return diagonal_element(ones(ctx.rank()), Tuple(ctx.rank(), -1), ctx);
}

/// Shift vector of a symbol of S(1...1), sorted weakly decreasing.
inline Tuple torus_exponent(const BasisSymbol& x) {
  const Tuple all_ones = ones(x.rank());
  if (x.top() != all_ones || x.middle() != all_ones) {
    throw DomainError("symbol " + format_symbol(x) + " is not in the corner of 1...1");
  }
  Tuple eps = x.shift();
  std::sort(eps.begin(), eps.end(), std::greater<>());
  return eps;
}

namespace detail {

class LaurentNormalizer {
 public:
  explicit LaurentNormalizer(const AlgebraContext& ctx) : ctx_(ctx), r_(ctx.rank()) {}

  LaurentPoly run(const AlgebraElement& e) {
    LaurentPoly out(r_, ctx_.field());
    for (const auto& [x, c] : e.terms()) {
      LaurentPoly term = monomial(torus_exponent(x));
      term *= c;
      out += term;
    }
    return out;
  }

 private:
  static constexpr std::size_t kStepLimit = 1'000'000;

  LaurentPoly variable_power(std::size_t k, std::int64_t power) const {
    LaurentPoly::Exponents e(r_, 0);
    e[k - 1] = power;
    return LaurentPoly::monomial(e, Scalar::one(ctx_.field()));
  }

  /// Normal form of xi^{eps}, eps weakly decreasing.
  LaurentPoly monomial(const Tuple& eps) {
    if (auto it = memo_.find(eps); it != memo_.end()) return it->second;
    if (++steps_ > kStepLimit) {
      throw Error("Laurent normal form did not terminate; this indicates a bug");
    }
    LaurentPoly result(r_, ctx_.field());
    const std::int64_t last = eps.back();
    if (last != 0) {
      // xi^{eps} = xi^{eps - last(1..1)} t_r^{last}
      Tuple rest(eps);
      for (auto& v : rest) v = detail::checked_sub(v, last);
      result = monomial(rest) * variable_power(r_, last);
    } else if (std::all_of(eps.begin(), eps.end(), [](std::int64_t v) { return v == 0; })) {
      result = LaurentPoly::one(r_, ctx_.field());
    } else {
      // k = max{s : eps_s > 0}; xi^{eps - eps^k} t_k = xi^{eps} + corrections.
      std::size_t k = r_;
      while (eps[k - 1] == 0) --k;
      Tuple rest(eps);
      for (std::size_t s = 0; s < k; ++s) --rest[s];
      const AlgebraElement product =
          diagonal_element(ones(r_), rest, ctx_) * t_generator(k, ctx_);
      const BasisSymbol target = diagonal_symbol(ones(r_), eps, ctx_);
      const Scalar lead = product.coefficient(target);
      if (!lead.is_one()) {
        throw Error("leading coefficient of xi^{eps - eps^k} t_k is not 1; this indicates a bug");
      }
      result = monomial(rest) * variable_power(k, 1);
      for (const auto& [z, c] : product.terms()) {
        if (z == target) continue;
        LaurentPoly correction = monomial(torus_exponent(z));
        correction *= c;
        result -= correction;
      }
    }
    memo_.emplace(eps, result);
    return result;
  }

  const AlgebraContext& ctx_;
  std::size_t r_;
  std::size_t steps_ = 0;
  std::map<Tuple, LaurentPoly> memo_;
};

}  // namespace detail

/// The unique P in K[t_1..t_{r-1}, t_r^{+-1}] with laurent_evaluate(P) = e,
/// for e supported on symbols xi_{1..1, 1..1 + n eps}.
inline LaurentPoly laurent_normal_form(const AlgebraElement& e) {
  return detail::LaurentNormalizer(e.context()).run(e);
}

/// Substitutes t_k -> t_generator(k) and t_r^{-1} -> t_r_inverse.
inline AlgebraElement laurent_evaluate(const LaurentPoly& p, const AlgebraContext& ctx) {
  if (p.vars() != ctx.rank()) throw DomainError("variable count differs from r");
  if (!(p.field() == ctx.field())) throw DomainError("polynomial over a different field");
  const std::size_t r = ctx.rank();
  const AlgebraElement unit = idempotent(ones(r), ctx);

  std::map<std::pair<std::size_t, std::int64_t>, AlgebraElement> powers;
  auto power = [&](std::size_t k, std::int64_t m) -> const AlgebraElement& {
    auto key = std::pair{k, m};
    if (auto it = powers.find(key); it != powers.end()) return it->second;
    AlgebraElement acc = unit;
    const AlgebraElement base = m < 0 ? t_r_inverse(ctx) : t_generator(k, ctx);
    for (std::int64_t s = 0; s < (m < 0 ? -m : m); ++s) acc = acc * base;
    return powers.emplace(key, std::move(acc)).first->second;
  };

  AlgebraElement out(ctx);
  for (const auto& [exps, c] : p.terms()) {
    AlgebraElement term = unit;
    for (std::size_t k = 1; k <= r; ++k) {
      if (exps[k - 1] != 0) term = term * power(k, exps[k - 1]);
    }
    term *= c;
    out += term;
  }
  return out;
}

/// #{eps : eps_1 >= ... >= eps_r >= 0, sum = m}, counted directly.
inline mpz_class graded_dimension(std::size_t r, std::int64_t m) {
  if (m < 0) throw DomainError("degree must be nonnegative");
  if (r == 0) throw DomainError("r must be positive");
  // count(len, total, cap): weakly decreasing sequences of length len with
  // entries at most cap summing to total.
  std::map<std::tuple<std::size_t, std::int64_t, std::int64_t>, mpz_class> memo;
  std::function<mpz_class(std::size_t, std::int64_t, std::int64_t)> count =
      [&](std::size_t len, std::int64_t total, std::int64_t cap) -> mpz_class {
    if (len == 0) return total == 0 ? 1 : 0;
    if (total > static_cast<std::int64_t>(len) * cap) return 0;
    const auto key = std::tuple{len, total, cap};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    mpz_class sum = 0;
    for (std::int64_t first = std::min(cap, total); first >= 0; --first) {
      sum += count(len - 1, total - first, first);
    }
    memo.emplace(key, sum);
    return sum;
  };
  return count(r, m, m);
}

struct MatrixLaurentTerm {
  std::int64_t row;
  std::int64_t col;
  std::int64_t power;
  Scalar coeff;

  friend bool operator==(const MatrixLaurentTerm&, const MatrixLaurentTerm&) = default;
};

/// For r = 1: xi_{(a), (b + n eps)} -> (a, b, eps), i.e. E_{ab} t^{eps}.
inline std::vector<MatrixLaurentTerm> matrix_laurent_form(const AlgebraElement& e) {
  if (e.context().r() != 1) throw DomainError("matrix Laurent form requires r = 1");
  std::vector<MatrixLaurentTerm> out;
  for (const auto& [x, c] : e.terms()) {
    out.push_back({x.top()[0], x.middle()[0], x.shift()[0], c});
  }
  return out;
}

}  // namespace schur
