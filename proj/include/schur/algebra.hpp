#pragma once

// The affine Schur algebra S(n,r): basis symbols, elements, and the product.
//
// A basis symbol is the orbit of a pair (a, b) of integer r-tuples under the
// diagonal action of the extended affine Weyl group. Its canonical
// representative has a weakly increasing top in 1..n and, within each block
// of equal top entries, an ascending bottom. The bottom stores j + n*eps in
// one tuple; j is recovered as the least positive residue mod n.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "schur/error.hpp"
#include "schur/field.hpp"
#include "schur/weyl.hpp"

namespace schur {

class AlgebraContext {
 public:
  AlgebraContext(std::int64_t n, std::int64_t r, Field field = Field::rational())
      : n_(n), r_(r), field_(field) {
    if (n < 1) throw DomainError("n must be at least 1");
    if (r < 1) throw DomainError("r must be at least 1");
    if (r > 64) throw DomainError("r larger than 64 is not supported");
  }

  std::int64_t n() const noexcept { return n_; }
  std::int64_t r() const noexcept { return r_; }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(r_); }
  const Field& field() const noexcept { return field_; }

  AlgebraContext with_field(Field f) const { return {n_, r_, f}; }

  friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;

 private:
  std::int64_t n_;
  std::int64_t r_;
  Field field_;
};

/// Least positive remainder in 1..n.
inline std::int64_t residue(std::int64_t v, std::int64_t n) {
  const std::int64_t m = detail::checked_sub(v, 1) % n;
  return (m < 0 ? m + n : m) + 1;
}

inline Tuple residues(const Tuple& t, std::int64_t n) {
  Tuple out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) out[k] = residue(t[k], n);
  return out;
}

/// (t - residues(t)) / n.
inline Tuple shift_part(const Tuple& t, std::int64_t n) {
  Tuple out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    out[k] = (t[k] - residue(t[k], n)) / n;
  }
  return out;
}

/// j + n*eps, entrywise, with overflow checks.
inline Tuple fold(const Tuple& j, const Tuple& eps, std::int64_t n) {
  if (j.size() != eps.size()) throw DomainError("tuple length mismatch");
  Tuple out(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    out[k] = detail::checked_add(j[k], detail::checked_mul(n, eps[k]));
  }
  return out;
}

inline Tuple sorted(Tuple t) {
  std::sort(t.begin(), t.end());
  return t;
}

/// Weight lambda with lambda_s = #{k : i_k = s}, s = 1..n.
inline Tuple weight(const Tuple& i, const AlgebraContext& ctx) {
  if (i.size() != ctx.rank()) throw DomainError("tuple length mismatch");
  Tuple out(static_cast<std::size_t>(ctx.n()), 0);
  for (auto v : i) {
    if (v < 1 || v > ctx.n()) throw DomainError("tuple entry out of range 1..n");
    ++out[static_cast<std::size_t>(v - 1)];
  }
  return out;
}

/// All weakly increasing r-tuples over the ascending value list, in
/// lexicographic order.
inline std::vector<Tuple> weakly_increasing_tuples(const std::vector<std::int64_t>& values,
                                                   std::size_t r) {
  std::vector<Tuple> out;
  if (values.empty()) return out;
  std::vector<std::size_t> idx(r, 0);
  while (true) {
    Tuple t(r);
    for (std::size_t k = 0; k < r; ++k) t[k] = values[idx[k]];
    out.push_back(std::move(t));
    std::size_t k = r;
    while (k > 0 && idx[k - 1] + 1 == values.size()) --k;
    if (k == 0) break;
    const std::size_t next = idx[k - 1] + 1;
    for (std::size_t m = k - 1; m < r; ++m) idx[m] = next;
  }
  return out;
}

inline std::vector<std::int64_t> value_range(std::int64_t n) {
  std::vector<std::int64_t> values(static_cast<std::size_t>(n));
  for (std::int64_t v = 1; v <= n; ++v) values[static_cast<std::size_t>(v - 1)] = v;
  return values;
}

class BasisSymbol {
 public:
  /// Validates the canonical-form invariants.
  static BasisSymbol from_canonical(Tuple top, Tuple bottom, std::int64_t n) {
    if (n < 1) throw DomainError("n must be at least 1");
    if (top.size() != bottom.size() || top.empty()) {
      throw DomainError("top and bottom must be nonempty and of equal length");
    }
    for (std::size_t k = 0; k < top.size(); ++k) {
      if (top[k] < 1 || top[k] > n) throw DomainError("top entry out of range 1..n");
      if (k > 0 && top[k] < top[k - 1]) throw DomainError("top is not weakly increasing");
      if (k > 0 && top[k] == top[k - 1] && bottom[k] < bottom[k - 1]) {
        throw DomainError("bottom not ascending within a top block");
      }
    }
    return BasisSymbol(std::move(top), std::move(bottom), n);
  }

  const Tuple& top() const noexcept { return top_; }
  const Tuple& bottom() const noexcept { return bottom_; }
  std::int64_t n() const noexcept { return n_; }
  std::size_t rank() const noexcept { return top_.size(); }

  /// j = least positive residues of the bottom.
  Tuple middle() const { return residues(bottom_, n_); }
  /// eps with bottom = j + n*eps.
  Tuple shift() const { return shift_part(bottom_, n_); }

  /// True for symbols xi_{i, i + n eps}.
  bool is_diagonal() const { return middle() == top_; }

  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
  friend auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;

 private:
  friend struct SymbolFactory;
  BasisSymbol(Tuple top, Tuple bottom, std::int64_t n)
      : top_(std::move(top)), bottom_(std::move(bottom)), n_(n) {}

  Tuple top_;
  Tuple bottom_;
  std::int64_t n_ = 1;
};

struct SymbolFactory {
  static BasisSymbol make(Tuple top, Tuple bottom, std::int64_t n) {
    return BasisSymbol(std::move(top), std::move(bottom), n);
  }
};

struct CanonicalPair {
  BasisSymbol symbol;
  /// act(a, witness) = symbol.top() and act(b, witness) = symbol.bottom().
  ExtendedWeylElement witness;
};

namespace detail {

/// Sorting permutation by (top, bottom) and the shifted pair.
inline Permutation canonical_order(const Tuple& top, const Tuple& bottom) {
  std::vector<int> order(top.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const auto ux = static_cast<std::size_t>(x);
    const auto uy = static_cast<std::size_t>(y);
    if (top[ux] != top[uy]) return top[ux] < top[uy];
    return bottom[ux] < bottom[uy];
  });
  return Permutation::from_zero_based(std::move(order));
}

}  // namespace detail

inline CanonicalPair canonicalize_pair(const Tuple& a, const Tuple& b, std::int64_t n) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (a.size() != b.size() || a.empty()) {
    throw DomainError("tuples must be nonempty and of equal length");
  }
  const Tuple abar = residues(a, n);
  Tuple eps1(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) eps1[k] = (abar[k] - a[k]) / n;
  const Tuple shifted = fold(b, eps1, n);
  const Permutation order = detail::canonical_order(abar, shifted);
  ExtendedWeylElement witness{order, permute(eps1, order)};
  return {SymbolFactory::make(permute(abar, order), permute(shifted, order), n),
          std::move(witness)};
}

inline CanonicalPair canonicalize_pair(const Tuple& a, const Tuple& b,
                                       const AlgebraContext& ctx) {
  if (a.size() != ctx.rank()) throw DomainError("tuple length does not match r");
  return canonicalize_pair(a, b, ctx.n());
}

/// Canonical symbol of the orbit of (a, b).
inline BasisSymbol canonical(const Tuple& a, const Tuple& b, std::int64_t n) {
  return canonicalize_pair(a, b, n).symbol;
}

inline bool orbit_equal(const BasisSymbol& x, const BasisSymbol& y) {
  if (x.n() != y.n() || x.rank() != y.rank()) {
    throw DomainError("symbols from different contexts");
  }
  return x == y;
}

/// Finitely supported map from basis symbols to field scalars.
class AlgebraElement {
 public:
  using Terms = std::map<BasisSymbol, Scalar>;

  explicit AlgebraElement(AlgebraContext ctx) : ctx_(std::move(ctx)) {}

  static AlgebraElement basis(const BasisSymbol& x, const AlgebraContext& ctx) {
    AlgebraElement e(ctx);
    e.add_term(x, Scalar::one(ctx.field()));
    return e;
  }

  const AlgebraContext& context() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(const BasisSymbol& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Scalar::zero(ctx_.field()) : it->second;
  }

  void add_term(const BasisSymbol& x, const Scalar& c) {
    if (x.n() != ctx_.n() || static_cast<std::int64_t>(x.rank()) != ctx_.r()) {
      throw DomainError("symbol does not belong to this context");
    }
    if (!(c.field() == ctx_.field())) throw DomainError("coefficient from another field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check(o);
    for (const auto& [x, c] : o.terms_) add_term(x, c);
    return *this;
  }

  AlgebraElement& operator-=(const AlgebraElement& o) {
    check(o);
    for (const auto& [x, c] : o.terms_) add_term(x, -c);
    return *this;
  }

  AlgebraElement& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [x, v] : terms_) v *= c;
    return *this;
  }

  AlgebraElement operator-() const {
    AlgebraElement out(*this);
    for (auto& [x, v] : out.terms_) v = -v;
    return out;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  void check(const AlgebraElement& o) const {
    if (!(ctx_ == o.ctx_)) throw DomainError("elements from different contexts");
  }

  AlgebraContext ctx_;
  Terms terms_;
};

/// Integer structure constants before reduction into a field.
using IntegerCombination = std::map<BasisSymbol, mpz_class>;

inline AlgebraElement to_element(const IntegerCombination& c, const AlgebraContext& ctx) {
  AlgebraElement e(ctx);
  for (const auto& [x, v] : c) e.add_term(x, Scalar::from_integer(ctx.field(), v));
  return e;
}

/// The data of a composable product xi_{i, j + n eps} * xi_{j, l + n eps'}
/// with the right factor transported so that its top reads exactly j.
struct ProductData {
  Tuple i, j, l, eps, eps_prime;
  std::int64_t n = 1;
  YoungSubgroup left;    // Sigma_{j, l, eps'}
  YoungSubgroup middle;  // Sigma_j
  YoungSubgroup right;   // Sigma_{i, j, eps}
};

inline void check_same_context(const BasisSymbol& x, const BasisSymbol& y) {
  if (x.n() != y.n() || x.rank() != y.rank()) {
    throw DomainError("symbols from different contexts");
  }
}

/// Empty when the middle residues of x do not match the top of y.
inline std::optional<ProductData> product_data(const BasisSymbol& x, const BasisSymbol& y) {
  check_same_context(x, y);
  const std::int64_t n = x.n();
  ProductData d;
  d.n = n;
  d.i = x.top();
  d.j = x.middle();
  d.eps = x.shift();
  if (sorted(d.j) != y.top()) return std::nullopt;

  // tau with (y.top tau) = j, matching equal values in order.
  const Tuple& ytop = y.top();
  std::vector<int> tau(d.j.size());
  std::map<std::int64_t, std::size_t> next;
  for (std::size_t k = 0; k < d.j.size(); ++k) {
    auto [it, inserted] = next.try_emplace(
        d.j[k], static_cast<std::size_t>(std::lower_bound(ytop.begin(), ytop.end(), d.j[k]) -
                                         ytop.begin()));
    tau[k] = static_cast<int>(it->second++);
  }
  const Tuple transported = permute(y.bottom(), Permutation::from_zero_based(std::move(tau)));
  d.l = residues(transported, n);
  d.eps_prime = shift_part(transported, n);
  d.left = stabilizer_of(d.j, d.l, d.eps_prime);
  d.middle = stabilizer_of(d.j);
  d.right = stabilizer_of(d.i, d.j, d.eps);
  return d;
}

/// The term of the double-coset product indexed by `delta`:
/// [Sigma_{i, l delta, eps' delta + eps} : Sigma_{i, j, l delta, eps' delta, eps}]
/// times xi_{i, l delta + n(eps' delta + eps)}.
inline std::pair<BasisSymbol, mpz_class> product_term(const ProductData& d,
                                                      const Permutation& delta) {
  const Tuple ld = permute(d.l, delta);
  const Tuple epd = permute(d.eps_prime, delta);
  Tuple ed(epd.size());
  for (std::size_t k = 0; k < ed.size(); ++k) ed[k] = detail::checked_add(epd[k], d.eps[k]);
  BasisSymbol symbol = canonical(d.i, fold(ld, ed, d.n), d.n);
  mpz_class index = subgroup_index(stabilizer_of(d.i, ld, ed),
                                   stabilizer_of(d.i, d.j, ld, epd, d.eps));
  return {std::move(symbol), std::move(index)};
}

/// Integer structure constants of x*y via the double-coset product formula.
inline IntegerCombination structure_constants(const BasisSymbol& x, const BasisSymbol& y,
                                              std::uint64_t limit = enumeration_limit()) {
  IntegerCombination out;
  const auto data = product_data(x, y);
  if (!data) return out;
  for (const auto& delta : double_cosets(data->left, data->middle, data->right, limit)) {
    auto [symbol, coeff] = product_term(*data, delta);
    out[symbol] += coeff;
  }
  return out;
}

/// Integer structure constants of x*y by direct counting of intermediate
/// tuples s, independent of the double-coset formula.
inline IntegerCombination oracle_structure_constants(const BasisSymbol& x, const BasisSymbol& y,
                                                     std::uint64_t limit = enumeration_limit()) {
  check_same_context(x, y);
  const std::int64_t n = x.n();
  const std::size_t r = x.rank();
  const Tuple& i = x.top();
  const Tuple& k = y.top();

  // Middles s with (i, x.bottom) ~ (i, s): the orbit of x.bottom under Sigma_i.
  std::set<Tuple> middles;
  for (const auto& sigma : enumerate_elements(stabilizer_of(i), limit)) {
    middles.insert(permute(x.bottom(), sigma));
  }

  const std::vector<Permutation> stab_k = enumerate_elements(stabilizer_of(k), limit);
  std::set<BasisSymbol> candidates;
  for (const Tuple& s : middles) {
    const Tuple rs = residues(s, n);
    if (sorted(rs) != k) continue;
    // w0 = (tau, eta) with act(k, w0) = s.
    std::vector<int> tau(r);
    std::vector<bool> used(r, false);
    for (std::size_t m = 0; m < r; ++m) {
      for (std::size_t p = 0; p < r; ++p) {
        if (!used[p] && k[p] == rs[m]) {
          used[p] = true;
          tau[m] = static_cast<int>(p);
          break;
        }
      }
    }
    const ExtendedWeylElement w0{Permutation::from_zero_based(std::move(tau)), shift_part(s, n)};
    for (const auto& v : stab_k) {
      const Tuple q = act(permute(y.bottom(), v), w0, n);
      candidates.insert(canonical(i, q, n));
    }
  }

  IntegerCombination out;
  for (const auto& c : candidates) {
    long count = 0;
    for (const Tuple& s : middles) {
      if (canonical(s, c.bottom(), n) == y) ++count;
    }
    if (count != 0) out[c] = count;
  }
  return out;
}

inline AlgebraElement multiply_symbols(const BasisSymbol& x, const BasisSymbol& y,
                                       const AlgebraContext& ctx) {
  return to_element(structure_constants(x, y), ctx);
}

inline AlgebraElement multiply_oracle(const BasisSymbol& x, const BasisSymbol& y,
                                      const AlgebraContext& ctx) {
  return to_element(oracle_structure_constants(x, y), ctx);
}

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.context() == b.context())) throw DomainError("elements from different contexts");
  const AlgebraContext& ctx = a.context();
  AlgebraElement out(ctx);
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      const Scalar c = cx * cy;
      for (const auto& [z, v] : structure_constants(x, y)) {
        out.add_term(z, c * Scalar::from_integer(ctx.field(), v));
      }
    }
  }
  return out;
}

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b);
}

/// xi_{i,i} for a tuple with entries in 1..n.
inline AlgebraElement idempotent(const Tuple& i, const AlgebraContext& ctx) {
  weight(i, ctx);  // range check
  return AlgebraElement::basis(canonical(i, i, ctx.n()), ctx);
}

/// Sum of xi_{i,i} over weakly increasing i.
inline AlgebraElement one(const AlgebraContext& ctx) {
  AlgebraElement e(ctx);
  for (const auto& i : weakly_increasing_tuples(value_range(ctx.n()), ctx.rank())) {
    e.add_term(SymbolFactory::make(i, i, ctx.n()), Scalar::one(ctx.field()));
  }
  return e;
}

inline AlgebraElement symbol_element(const Tuple& a, const Tuple& b, const AlgebraContext& ctx) {
  return AlgebraElement::basis(canonicalize_pair(a, b, ctx).symbol, ctx);
}

}  // namespace schur
