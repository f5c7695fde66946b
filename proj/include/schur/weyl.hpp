#pragma once

// Permutations, Young subgroups and the extended affine Weyl group
// Sigma_r x| Z^r acting on integer r-tuples.
//
// Conventions. Positions are 0-based internally and 1-based in every text
// or JSON rendering. A permutation acts on tuples on the right by place
// permutation, (t p)_k = t_{p(k)}, and products are composed so that
// t (p q) = (t p) q, i.e. (p q)(k) = p(q(k)). An element w = (sigma, eps)
// acts on a tuple by (i w)_k = i_{sigma(k)} + n eps_k.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "schur/error.hpp"

namespace schur {

using Tuple = std::vector<std::int64_t>;

/// Largest group order any enumeration may visit. Defaults to 8! and can be
/// overridden once per process through SCHUR_ENUM_BOUND.
inline std::uint64_t enumeration_limit() {
  static const std::uint64_t limit = [] {
    const char* env = std::getenv("SCHUR_ENUM_BOUND");
    if (env == nullptr || *env == '\0') return std::uint64_t{40320};
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || parsed == 0) {
      throw DomainError(std::string("invalid SCHUR_ENUM_BOUND: ") + env);
    }
    return static_cast<std::uint64_t>(parsed);
  }();
  return limit;
}

class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
  }

  static Permutation from_zero_based(std::vector<int> images) {
    validate(images, 0);
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  static Permutation from_one_based(const std::vector<int>& images) {
    validate(images, 1);
    Permutation p;
    p.images_.reserve(images.size());
    for (int v : images) p.images_.push_back(v - 1);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  int operator()(std::size_t k) const { return images_[k]; }
  const std::vector<int>& images() const noexcept { return images_; }

  std::vector<int> one_based() const {
    std::vector<int> out(images_);
    for (int& v : out) ++v;
    return out;
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < images_.size(); ++k) {
      if (images_[k] != static_cast<int>(k)) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) {
      out.images_[static_cast<std::size_t>(images_[k])] = static_cast<int>(k);
    }
    return out;
  }

  /// (p * q)(k) = p(q(k)); realizes t (p q) = (t p) q.
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) {
      throw DomainError("permutation degrees differ");
    }
    Permutation out;
    out.images_.resize(p.degree());
    for (std::size_t k = 0; k < p.degree(); ++k) {
      out.images_[k] = p.images_[static_cast<std::size_t>(q.images_[k])];
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  static void validate(const std::vector<int>& images, int base) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      const int k = v - base;
      if (k < 0 || k >= static_cast<int>(images.size()) ||
          seen[static_cast<std::size_t>(k)]) {
        throw DomainError("not a permutation image sequence");
      }
      seen[static_cast<std::size_t>(k)] = true;
    }
  }

  std::vector<int> images_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) {
  return p * q;
}

/// Place permutation (t p)_k = t_{p(k)}.
template <class T>
std::vector<T> permute(const std::vector<T>& t, const Permutation& p) {
  if (t.size() != p.degree()) throw DomainError("tuple length mismatch");
  std::vector<T> out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    out[k] = t[static_cast<std::size_t>(p(k))];
  }
  return out;
}

struct ExtendedWeylElement {
  Permutation sigma;
  Tuple shift;

  static ExtendedWeylElement identity(std::size_t r) {
    return {Permutation(r), Tuple(r, 0)};
  }

  std::size_t degree() const noexcept { return sigma.degree(); }

  friend bool operator==(const ExtendedWeylElement&,
                         const ExtendedWeylElement&) = default;
  friend auto operator<=>(const ExtendedWeylElement&,
                          const ExtendedWeylElement&) = default;
};

/// (sigma, eps)(sigma', eps') = (sigma sigma', eps sigma' + eps').
inline ExtendedWeylElement compose(const ExtendedWeylElement& w,
                                   const ExtendedWeylElement& w2) {
  if (w.degree() != w2.degree() || w.shift.size() != w.degree() ||
      w2.shift.size() != w2.degree()) {
    throw DomainError("extended Weyl elements of different rank");
  }
  Tuple shift = permute(w.shift, w2.sigma);
  for (std::size_t k = 0; k < shift.size(); ++k) {
    shift[k] = detail::checked_add(shift[k], w2.shift[k]);
  }
  return {w.sigma * w2.sigma, std::move(shift)};
}

inline ExtendedWeylElement inverse(const ExtendedWeylElement& w) {
  Permutation inv = w.sigma.inverse();
  Tuple shift = permute(w.shift, inv);
  for (auto& e : shift) e = detail::checked_sub(0, e);
  return {std::move(inv), std::move(shift)};
}

/// Right action (i w)_k = i_{sigma(k)} + n eps_k.
inline Tuple act(const Tuple& i, const ExtendedWeylElement& w, std::int64_t n) {
  if (n <= 0) throw DomainError("modulus n must be positive");
  if (i.size() != w.degree() || w.shift.size() != w.degree()) {
    throw DomainError("tuple length mismatch");
  }
  Tuple out(i.size());
  for (std::size_t k = 0; k < i.size(); ++k) {
    out[k] = detail::checked_add(i[static_cast<std::size_t>(w.sigma(k))],
                                 detail::checked_mul(n, w.shift[k]));
  }
  return out;
}

/// A set partition of the positions {0, ..., r-1}, standing for the
/// subgroup of Sigma_r that preserves every block.
class YoungSubgroup {
 public:
  YoungSubgroup() = default;

  /// Builds the partition whose blocks are the level sets of `labels`.
  static YoungSubgroup from_labels(std::span<const int> labels) {
    YoungSubgroup g;
    g.labels_.resize(labels.size());
    std::unordered_map<int, int> renumber;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      auto [it, inserted] =
          renumber.emplace(labels[k], static_cast<int>(renumber.size()));
      g.labels_[k] = it->second;
    }
    g.block_count_ = static_cast<int>(renumber.size());
    return g;
  }

  /// Blocks given as 1-based position lists.
  static YoungSubgroup from_blocks(std::size_t r,
                                   const std::vector<std::vector<int>>& blocks) {
    std::vector<int> labels(r, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw DomainError("empty block");
      for (int pos : blocks[b]) {
        if (pos < 1 || pos > static_cast<int>(r) ||
            labels[static_cast<std::size_t>(pos - 1)] != -1) {
          throw DomainError("blocks do not form a set partition");
        }
        labels[static_cast<std::size_t>(pos - 1)] = static_cast<int>(b);
      }
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
      throw DomainError("blocks do not cover all positions");
    }
    return from_labels(labels);
  }

  static YoungSubgroup trivial(std::size_t r) {
    std::vector<int> labels(r);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
  }

  static YoungSubgroup full(std::size_t r) {
    return from_labels(std::vector<int>(r, 0));
  }

  std::size_t degree() const noexcept { return labels_.size(); }
  int block_count() const noexcept { return block_count_; }
  int label(std::size_t k) const { return labels_[k]; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  /// Blocks as 0-based position lists, sorted by least element.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count_));
    for (std::size_t k = 0; k < labels_.size(); ++k) {
      out[static_cast<std::size_t>(labels_[k])].push_back(static_cast<int>(k));
    }
    return out;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree()) return false;
    for (std::size_t k = 0; k < degree(); ++k) {
      if (labels_[static_cast<std::size_t>(p(k))] != labels_[k]) return false;
    }
    return true;
  }

  /// True when every block of *this lies inside a block of `coarser`.
  bool refines(const YoungSubgroup& coarser) const {
    if (coarser.degree() != degree()) return false;
    std::vector<int> image(static_cast<std::size_t>(block_count_), -1);
    for (std::size_t k = 0; k < degree(); ++k) {
      int& slot = image[static_cast<std::size_t>(labels_[k])];
      if (slot == -1) {
        slot = coarser.labels_[k];
      } else if (slot != coarser.labels_[k]) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const YoungSubgroup&, const YoungSubgroup&) = default;

 private:
  std::vector<int> labels_;
  int block_count_ = 0;
};

/// Common refinement (intersection of the two subgroups).
inline YoungSubgroup refine(const YoungSubgroup& p, const YoungSubgroup& q) {
  if (p.degree() != q.degree()) throw DomainError("partition degrees differ");
  const int width = q.block_count();
  std::vector<int> labels(p.degree());
  for (std::size_t k = 0; k < p.degree(); ++k) {
    labels[k] = p.label(k) * width + q.label(k);
  }
  return YoungSubgroup::from_labels(labels);
}

/// Positions are in one block iff every tuple agrees on them.
inline YoungSubgroup stabilizer(std::span<const Tuple* const> tuples) {
  if (tuples.empty()) throw DomainError("stabilizer of an empty tuple list");
  const std::size_t r = tuples.front()->size();
  for (const Tuple* t : tuples) {
    if (t->size() != r) throw DomainError("tuple length mismatch");
  }
  std::vector<int> labels(r);
  for (std::size_t k = 0; k < r; ++k) {
    labels[k] = static_cast<int>(k);
    for (std::size_t m = 0; m < k; ++m) {
      bool same = true;
      for (const Tuple* t : tuples) {
        if ((*t)[k] != (*t)[m]) {
          same = false;
          break;
        }
      }
      if (same) {
        labels[k] = labels[m];
        break;
      }
    }
  }
  return YoungSubgroup::from_labels(labels);
}

inline YoungSubgroup stabilizer(const std::vector<Tuple>& tuples) {
  std::vector<const Tuple*> ptrs;
  ptrs.reserve(tuples.size());
  for (const auto& t : tuples) ptrs.push_back(&t);
  return stabilizer(std::span<const Tuple* const>(ptrs));
}

template <class... Ts>
  requires(sizeof...(Ts) >= 1 && (std::same_as<Ts, Tuple> && ...))
YoungSubgroup stabilizer_of(const Ts&... tuples) {
  const Tuple* ptrs[] = {&tuples...};
  return stabilizer(std::span<const Tuple* const>(ptrs));
}

inline mpz_class factorial(unsigned long k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

/// Product of the factorials of the block sizes.
inline mpz_class subgroup_order(const YoungSubgroup& h) {
  mpz_class order = 1;
  for (const auto& block : h.blocks()) order *= factorial(block.size());
  return order;
}

/// [H : K] for K refining H.
inline mpz_class subgroup_index(const YoungSubgroup& h, const YoungSubgroup& k) {
  if (!k.refines(h)) {
    throw DomainError("subgroup index requires the second partition to refine the first");
  }
  return subgroup_order(h) / subgroup_order(k);
}

namespace detail {

inline void check_limit(const YoungSubgroup& g, std::uint64_t limit) {
  if (subgroup_order(g) > mpz_class(std::to_string(limit))) {
    throw EnumerationLimitError("group order " + subgroup_order(g).get_str() +
                                " exceeds the enumeration limit " +
                                std::to_string(limit));
  }
}

}  // namespace detail

/// All block-preserving permutations, in lexicographic order of images.
inline std::vector<Permutation> enumerate_elements(
    const YoungSubgroup& h, std::uint64_t limit = enumeration_limit()) {
  detail::check_limit(h, limit);
  const std::size_t r = h.degree();
  std::vector<Permutation> out;
  std::vector<int> images(r);
  std::vector<bool> used(r, false);
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == r) {
      out.push_back(Permutation::from_zero_based(images));
      return;
    }
    for (std::size_t v = 0; v < r; ++v) {
      if (used[v] || h.label(v) != h.label(k)) continue;
      used[v] = true;
      images[k] = static_cast<int>(v);
      extend(k + 1);
      used[v] = false;
    }
  };
  extend(0);
  return out;
}

}  // namespace schur

template <>
struct std::hash<schur::Permutation> {
  std::size_t operator()(const schur::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

namespace schur {

/// One representative per double coset H d K inside G, each the
/// lexicographically smallest element of its coset, listed in increasing
/// order. H and K must refine G.
inline std::vector<Permutation> double_cosets(
    const YoungSubgroup& h, const YoungSubgroup& g, const YoungSubgroup& k,
    std::uint64_t limit = enumeration_limit()) {
  if (!h.refines(g) || !k.refines(g)) {
    throw DomainError("double cosets require H and K inside G");
  }
  const std::vector<Permutation> elements = enumerate_elements(g, limit);
  if (elements.size() == 1) return elements;
  const std::vector<Permutation> left = enumerate_elements(h, limit);
  const std::vector<Permutation> right = enumerate_elements(k, limit);

  std::unordered_map<Permutation, std::size_t> index;
  index.reserve(elements.size());
  for (std::size_t e = 0; e < elements.size(); ++e) index.emplace(elements[e], e);

  std::vector<bool> seen(elements.size(), false);
  std::vector<Permutation> reps;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    if (seen[e]) continue;
    reps.push_back(elements[e]);
    for (const auto& a : left) {
      const Permutation ad = a * elements[e];
      for (const auto& b : right) seen[index.at(ad * b)] = true;
    }
  }
  return reps;
}

}  // namespace schur
