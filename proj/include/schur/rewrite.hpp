#pragma once

// Rewriting xi_{i, j + n eps} over B_i in terms of the finitely many
// generators whose shift eps is absolutely successive.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/commutative.hpp"
#include "schur/laurent_form.hpp"

namespace schur {

/// The distinct values of eps form a run of consecutive integers.
inline bool is_successive(const Tuple& eps) {
  if (eps.empty()) return true;
  const std::set<std::int64_t> values(eps.begin(), eps.end());
  return *values.rbegin() - *values.begin() + 1 == static_cast<std::int64_t>(values.size());
}

/// Successive, nonnegative, and containing 0.
inline bool is_absolutely_successive(const Tuple& eps) {
  return !eps.empty() && *std::min_element(eps.begin(), eps.end()) == 0 && is_successive(eps);
}

/// All absolutely successive tuples of length r, in lexicographic order.
inline std::vector<Tuple> absolutely_successive_tuples(std::size_t r) {
  std::vector<Tuple> out;
  Tuple current(r, 0);
  std::vector<int> count(r, 0);
  auto fill = [&](auto&& self, std::size_t pos, std::int64_t distinct, std::int64_t top) -> void {
    const auto remaining = static_cast<std::int64_t>(r - pos);
    if ((top + 1) - distinct > remaining) return;  // too many gaps left to fill
    if (pos == r) {
      out.push_back(current);
      return;
    }
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(r); ++v) {
      current[pos] = v;
      const bool fresh = count[static_cast<std::size_t>(v)]++ == 0;
      self(self, pos + 1, distinct + (fresh ? 1 : 0), std::max(top, v));
      --count[static_cast<std::size_t>(v)];
    }
  };
  if (r > 0) fill(fill, 0, 0, -1);
  return out;
}

inline std::vector<Tuple> fg_generators(const Tuple& i, const Tuple& j, const AlgebraContext& ctx) {
  weight(i, ctx);
  weight(j, ctx);
  return absolutely_successive_tuples(ctx.rank());
}

/// Shifts whose restriction to every block of equal values of i is
/// absolutely successive. i must be weakly increasing.
inline std::vector<Tuple> fg_generators_blockwise(const Tuple& i, const Tuple& j,
                                                  const AlgebraContext& ctx) {
  weight(i, ctx);
  weight(j, ctx);
  if (!std::is_sorted(i.begin(), i.end())) throw DomainError("i must be weakly increasing");
  std::vector<Tuple> out{Tuple{}};
  std::size_t start = 0;
  while (start < i.size()) {
    std::size_t end = start;
    while (end < i.size() && i[end] == i[start]) ++end;
    std::vector<Tuple> next;
    for (const auto& prefix : out) {
      for (const auto& block : absolutely_successive_tuples(end - start)) {
        Tuple t = prefix;
        t.insert(t.end(), block.begin(), block.end());
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
    start = end;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct RewriteTerm {
  Tuple diag_shift;
  Scalar coeff;
  BasisSymbol generator;
};

namespace detail {

class Rewriter {
 public:
  // generator -> coefficient in B_i
  using Decomposition = std::map<BasisSymbol, AlgebraElement>;

  explicit Rewriter(const AlgebraContext& ctx) : ctx_(ctx) {}

  Decomposition run(const BasisSymbol& x) {
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    if (++steps_ > kStepLimit) throw Error("rewriting did not terminate; this indicates a bug");
    const Tuple& i = x.top();
    const Tuple j = x.middle();
    const Tuple eps = x.shift();
    const std::int64_t t = *std::min_element(eps.begin(), eps.end());

    Decomposition out;
    if (t != 0) {
      // xi_{i, j + n eps} = xi_{i, i + n t(1..1)} xi_{i, j + n (eps - t(1..1))}
      Tuple rest(eps);
      for (auto& v : rest) v = checked_sub(v, t);
      const AlgebraElement factor = diagonal_element(i, Tuple(eps.size(), t), ctx_);
      for (const auto& [g, b] : run(canonical(i, fold(j, rest, ctx_.n()), ctx_.n()))) {
        add(out, g, factor * b);
      }
    } else if (is_successive(eps)) {
      add(out, x, idempotent(i, ctx_));
    } else {
      // Omega: positions above the lowest gap of eps, so that every entry in
      // Omega exceeds every entry outside by at least 2.
      const std::set<std::int64_t> values(eps.begin(), eps.end());
      std::int64_t below = *values.begin();
      for (auto it = std::next(values.begin()); it != values.end() && *it == below + 1; ++it) {
        below = *it;
      }
      Tuple omega(eps.size(), 0), rest(eps);
      for (std::size_t k = 0; k < eps.size(); ++k) {
        if (eps[k] > below) {
          omega[k] = 1;
          --rest[k];
        }
      }
      const AlgebraElement a = diagonal_element(i, omega, ctx_);
      const BasisSymbol smaller = canonical(i, fold(j, rest, ctx_.n()), ctx_.n());
      const AlgebraElement product = a * AlgebraElement::basis(smaller, ctx_);
      const Scalar lead = product.coefficient(x);
      if (lead.is_zero()) {
        throw Error("target coefficient vanished while rewriting " + format_symbol(x));
      }
      const Scalar scale = lead.inverse();
      for (const auto& [g, b] : run(smaller)) {
        AlgebraElement term = a * b;
        term *= scale;
        add(out, g, term);
      }
      for (const auto& [z, c] : product.terms()) {
        if (z == x) continue;
        const Scalar weight = -(c * scale);
        for (const auto& [g, b] : run(z)) {
          AlgebraElement term = b;
          term *= weight;
          add(out, g, term);
        }
      }
    }
    memo_.emplace(x, out);
    return out;
  }

 private:
  static constexpr std::size_t kStepLimit = 200'000;

  void add(Decomposition& d, const BasisSymbol& g, const AlgebraElement& b) {
    auto [it, inserted] = d.try_emplace(g, b);
    if (!inserted) it->second += b;
    if (it->second.is_zero()) d.erase(it);
  }

  const AlgebraContext& ctx_;
  std::size_t steps_ = 0;
  std::map<BasisSymbol, Decomposition> memo_;
};

}  // namespace detail

/// Terms (d, c, g) with x = sum c * xi_{i, i + n d} * g, every g having an
/// absolutely successive shift. Ordered by generator, then by d.
inline std::vector<RewriteTerm> fg_rewrite(const BasisSymbol& x, const AlgebraContext& ctx) {
  if (x.n() != ctx.n() || x.rank() != ctx.rank()) throw DomainError("symbol from another context");
  std::vector<RewriteTerm> out;
  for (const auto& [g, b] : detail::Rewriter(ctx).run(x)) {
    for (const auto& [d, c] : b.terms()) {
      out.push_back({d.shift(), c, g});
    }
  }
  return out;
}

inline AlgebraElement rewrite_expand(const std::vector<RewriteTerm>& terms, const AlgebraContext& ctx) {
  AlgebraElement out(ctx);
  for (const auto& t : terms) {
    AlgebraElement term =
        diagonal_element(t.generator.top(), t.diag_shift, ctx) * AlgebraElement::basis(t.generator, ctx);
    term *= t.coeff;
    out += term;
  }
  return out;
}

}  // namespace schur
