#pragma once

// Deterministic property suites over random and exhaustive samples.
//
// Each check draws from its own generator, seeded with
//   seed XOR fnv1a64(check name),
// so a check reports the same cases whether it runs alone or inside "all".
// Random bottoms come from [1 - bound, n + bound] and tops from the
// weakly increasing tuples of 1..n (see random.hpp for the generator).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/center.hpp"
#include "schur/commutative.hpp"
#include "schur/corner.hpp"
#include "schur/group_algebra.hpp"
#include "schur/io.hpp"
#include "schur/laurent_form.hpp"
#include "schur/random.hpp"
#include "schur/rewrite.hpp"
#include "schur/weyl.hpp"

namespace schur {

struct SuiteConfig {
  std::int64_t n = 2;
  std::size_t r = 2;
  Field field = Field::rational();
  std::uint64_t seed = 0;
  std::size_t cases = 500;
  std::int64_t bound = 6;
};

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string note;                            // e.g. why a check was skipped
  std::optional<std::string> counterexample;   // first failure only
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckResult> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed == 0; });
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"associativity", "oracle", "center", "laurent",
                                              "schur-weyl",    "rewrite", "cosets", "all"};
  return names;
}

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Every canonical symbol with bottom entries in [lo, hi].
inline std::vector<BasisSymbol> symbols_in_window(const AlgebraContext& ctx, std::int64_t lo,
                                                  std::int64_t hi) {
  std::set<BasisSymbol> out;
  const std::size_t r = ctx.rank();
  for (const auto& top : weakly_increasing_tuples(value_range(ctx.n()), r)) {
    Tuple bottom(r, lo);
    while (true) {
      out.insert(canonical(top, bottom, ctx.n()));
      std::size_t k = 0;
      while (k < r && bottom[k] == hi) bottom[k++] = lo;
      if (k == r) break;
      ++bottom[k];
    }
  }
  return {out.begin(), out.end()};
}

namespace detail {

/// Runs `count` cases of a check; a case returns an empty string on success
/// or a description of the counterexample. Exceptions count as failures.
class CheckRunner {
 public:
  CheckRunner(const SuiteConfig& cfg, std::vector<CheckResult>& out) : cfg_(cfg), out_(out) {}

  template <class Case>
  void run(const std::string& name, std::size_t count, Case&& one_case) {
    CheckResult result;
    result.name = name;
    Lcg rng(cfg_.seed ^ fnv1a64(name));
    for (std::size_t c = 0; c < count; ++c) {
      std::string failure;
      try {
        failure = one_case(rng, c);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure.empty()) {
        ++result.passed;
      } else {
        ++result.failed;
        if (!result.counterexample) result.counterexample = failure;
      }
    }
    out_.push_back(std::move(result));
  }

  void skip(const std::string& name, const std::string& why) {
    CheckResult result;
    result.name = name;
    result.note = "skipped: " + why;
    out_.push_back(std::move(result));
  }

 private:
  const SuiteConfig& cfg_;
  std::vector<CheckResult>& out_;
};

inline std::size_t scaled(std::size_t cases, std::size_t divisor) {
  return std::max<std::size_t>(1, cases / divisor);
}

inline std::string sym(const BasisSymbol& x) { return format_symbol(x); }

inline std::string mismatch(const std::string& what, const AlgebraElement& lhs, const AlgebraElement& rhs) {
  return what + ": " + format_element(lhs) + " != " + format_element(rhs);
}

inline void associativity_suite(const SuiteConfig& cfg, const AlgebraContext& ctx, CheckRunner& run) {
  const std::int64_t b = cfg.bound;
  run.run("associativity", cfg.cases, [&](Lcg& rng, std::size_t c) -> std::string {
    // alternate composable chains (usually nonzero) with unrelated triples
    const BasisSymbol x = random_symbol(rng, ctx, b);
    const BasisSymbol y = c % 2 == 0 ? random_composable(rng, x, ctx, b) : random_symbol(rng, ctx, b);
    const BasisSymbol z = c % 2 == 0 ? random_composable(rng, y, ctx, b) : random_symbol(rng, ctx, b);
    const AlgebraElement ex = AlgebraElement::basis(x, ctx);
    const AlgebraElement ey = AlgebraElement::basis(y, ctx);
    const AlgebraElement ez = AlgebraElement::basis(z, ctx);
    const AlgebraElement lhs = (ex * ey) * ez;
    const AlgebraElement rhs = ex * (ey * ez);
    if (lhs == rhs) return {};
    return mismatch("x=" + sym(x) + " y=" + sym(y) + " z=" + sym(z), lhs, rhs);
  });

  const AlgebraElement unit = one(ctx);
  run.run("identity", scaled(cfg.cases, 5), [&](Lcg& rng, std::size_t) -> std::string {
    const AlgebraElement e = random_element(rng, ctx, 3, b);
    if (unit * e != e) return mismatch("one*e", unit * e, e);
    if (e * unit != e) return mismatch("e*one", e * unit, e);
    return {};
  });

  const auto tops = weakly_increasing_tuples(value_range(ctx.n()), ctx.rank());
  run.run("orthogonal-idempotents", 1, [&](Lcg&, std::size_t) -> std::string {
    for (const auto& i : tops) {
      for (const auto& j : tops) {
        const AlgebraElement p = idempotent(i, ctx) * idempotent(j, ctx);
        const AlgebraElement expected = i == j ? idempotent(i, ctx) : AlgebraElement(ctx);
        if (p != expected) return mismatch("xi_{i,i} xi_{j,j}", p, expected);
      }
    }
    return {};
  });

  run.run("unit-absorption", cfg.cases, [&](Lcg& rng, std::size_t) -> std::string {
    const BasisSymbol x = random_symbol(rng, ctx, b);
    const AlgebraElement e = AlgebraElement::basis(x, ctx);
    const AlgebraElement left = idempotent(x.top(), ctx) * e;
    const AlgebraElement right = e * idempotent(x.middle(), ctx);
    if (left != e) return mismatch("left unit on " + sym(x), left, e);
    if (right != e) return mismatch("right unit on " + sym(x), right, e);
    return {};
  });
}

inline void oracle_suite(const SuiteConfig& cfg, const AlgebraContext& ctx, CheckRunner& run) {
  // exhaustive over composable pairs in a window of width min(bound, n)
  const std::int64_t w = std::min(cfg.bound, ctx.n());
  const auto symbols = symbols_in_window(ctx, 1 - w, ctx.n() + w);
  run.run("oracle-exhaustive", 1, [&](Lcg&, std::size_t) -> std::string {
    for (const auto& x : symbols) {
      const Tuple middle = sorted(x.middle());
      for (const auto& y : symbols) {
        if (y.top() != middle) continue;
        const AlgebraElement a = multiply_symbols(x, y, ctx);
        const AlgebraElement o = multiply_oracle(x, y, ctx);
        if (a != o) return mismatch("x=" + sym(x) + " y=" + sym(y), a, o);
      }
    }
    return {};
  });
  run.run("oracle-random", cfg.cases, [&](Lcg& rng, std::size_t c) -> std::string {
    const BasisSymbol x = random_symbol(rng, ctx, cfg.bound);
    const BasisSymbol y =
        c % 4 == 3 ? random_symbol(rng, ctx, cfg.bound) : random_composable(rng, x, ctx, cfg.bound);
    const AlgebraElement a = multiply_symbols(x, y, ctx);
    const AlgebraElement o = multiply_oracle(x, y, ctx);
    if (a != o) return mismatch("x=" + sym(x) + " y=" + sym(y), a, o);
    return {};
  });
}

inline void center_suite(const SuiteConfig& cfg, const AlgebraContext& ctx, CheckRunner& run) {
  run.run("centrality", cfg.cases, [&](Lcg& rng, std::size_t) -> std::string {
    const Tuple eps = random_tuple(rng, ctx.rank(), -2, 2);
    const AlgebraElement c = center_element(eps, ctx);
    const AlgebraElement x = AlgebraElement::basis(random_symbol(rng, ctx, cfg.bound), ctx);
    if (c * x != x * c) {
      return mismatch("c_eps with eps=(" + join(eps) + "), x=" + format_element(x), c * x, x * c);
    }
    return {};
  });
  run.run("center-normal-form-multiplicative", scaled(cfg.cases, 10),
          [&](Lcg& rng, std::size_t) -> std::string {
            const Tuple e1 = random_tuple(rng, ctx.rank(), -2, 2);
            const Tuple e2 = random_tuple(rng, ctx.rank(), -2, 2);
            const AlgebraElement a = center_element(e1, ctx);
            const AlgebraElement b = center_element(e2, ctx);
            const LaurentPoly lhs = center_normal_form(a * b);
            const LaurentPoly rhs = center_normal_form(a) * center_normal_form(b);
            if (lhs == rhs) return {};
            return "eps=(" + join(e1) + ") eps'=(" + join(e2) + "): " + format_laurent(lhs) +
                   " != " + format_laurent(rhs);
          });
}

inline void laurent_suite(const SuiteConfig& cfg, const AlgebraContext& ctx, CheckRunner& run) {
  const Tuple all_ones = ones(ctx.rank());
  run.run("laurent-round-trip", cfg.cases, [&](Lcg& rng, std::size_t) -> std::string {
    const AlgebraElement x = diagonal_element(all_ones, random_tuple(rng, ctx.rank(), -3, 3), ctx);
    const AlgebraElement back = laurent_evaluate(laurent_normal_form(x), ctx);
    if (back != x) return mismatch("evaluate(normal_form(x))", back, x);
    return {};
  });
  run.run("laurent-multiplicative", scaled(cfg.cases, 2), [&](Lcg& rng, std::size_t) -> std::string {
    const AlgebraElement x = diagonal_element(all_ones, random_tuple(rng, ctx.rank(), -2, 2), ctx);
    const AlgebraElement y = diagonal_element(all_ones, random_tuple(rng, ctx.rank(), -2, 2), ctx);
    const LaurentPoly lhs = laurent_normal_form(x * y);
    const LaurentPoly rhs = laurent_normal_form(x) * laurent_normal_form(y);
    if (lhs == rhs) return {};
    return "x=" + format_element(x) + " y=" + format_element(y) + ": " + format_laurent(lhs) +
           " != " + format_laurent(rhs);
  });
  run.run("b-commutative", cfg.cases, [&](Lcg& rng, std::size_t) -> std::string {
    const Tuple i = random_top(rng, ctx);
    const AlgebraElement a = diagonal_element(i, random_tuple(rng, ctx.rank(), -3, 3), ctx);
    const AlgebraElement b = diagonal_element(i, random_tuple(rng, ctx.rank(), -3, 3), ctx);
    if (a * b != b * a) {
      return mismatch("a=" + format_element(a) + " b=" + format_element(b), a * b, b * a);
    }
    return {};
  });
  run.run("b-factorization", cfg.cases, [&](Lcg& rng, std::size_t) -> std::string {
    const Tuple i = random_top(rng, ctx);
    const Tuple eps = random_tuple(rng, ctx.rank(), -3, 3);
    const AlgebraElement product = multiply_factors(i, b_subalgebra_factorize(i, eps, ctx), ctx);
    const AlgebraElement expected = diagonal_element(i, eps, ctx);
    if (product != expected) {
      return mismatch("i=(" + join(i) + ") eps=(" + join(eps) + ")", product, expected);
    }
    return {};
  });
  if (ctx.n() < 2 || ctx.r() < 2) {
    run.skip("b-maximality-witness", "no non-diagonal corner symbols unless n >= 2 and r >= 2");
  } else {
    run.run("b-maximality-witness", cfg.cases, [&](Lcg& rng, std::size_t) -> std::string {
      // a non-constant top and a middle that permutes it nontrivially
      Tuple i;
      do {
        i = random_top(rng, ctx);
      } while (i.front() == i.back());
      Tuple middle;
      do {
        middle = permute(i, random_permutation(rng, ctx.rank()));
      } while (middle == i);
      const Tuple eps = random_tuple(rng, ctx.rank(), -3, 3);
      const BasisSymbol x = canonical(i, fold(middle, eps, ctx.n()), ctx.n());
      if (x.is_diagonal()) return {};
      const AlgebraElement witness = diagonal_element(i, maximality_witness(x), ctx);
      if (commute(AlgebraElement::basis(x, ctx), witness)) return sym(x) + " commutes with its witness";
      return {};
    });
  }
  if (ctx.r() != 1) {
    run.skip("matrix-laurent-product", "requires r = 1");
  } else {
    run.run("matrix-laurent-product", cfg.cases, [&](Lcg& rng, std::size_t) -> std::string {
      const BasisSymbol x = random_symbol(rng, ctx, cfg.bound);
      const BasisSymbol y = random_symbol(rng, ctx, cfg.bound);
      const auto a = matrix_laurent_form(AlgebraElement::basis(x, ctx))[0];
      const auto b = matrix_laurent_form(AlgebraElement::basis(y, ctx))[0];
      const auto product = matrix_laurent_form(AlgebraElement::basis(x, ctx) * AlgebraElement::basis(y, ctx));
      std::vector<MatrixLaurentTerm> expected;
      if (a.col == b.row) {
        expected.push_back({a.row, b.col, a.power + b.power, Scalar::one(ctx.field())});
      }
      if (product != expected) return "E_ab t^e rule fails for x=" + sym(x) + " y=" + sym(y);
      return {};
    });
  }
}

inline void schur_weyl_suite(const SuiteConfig& cfg, const AlgebraContext& ctx, CheckRunner& run) {
  if (ctx.n() < ctx.r()) {
    run.skip("group-algebra-law", "requires n >= r");
  } else {
    run.run("group-algebra-law", cfg.cases, [&](Lcg& rng, std::size_t c) -> std::string {
      ExtendedWeylElement w = random_weyl(rng, ctx.rank(), 3);
      ExtendedWeylElement w2 = random_weyl(rng, ctx.rank(), 3);
      // pure shifts, pure permutations and mixed elements in turn
      if (c % 3 == 0) w.sigma = w2.sigma = Permutation(ctx.rank());
      if (c % 3 == 1) w.shift = w2.shift = Tuple(ctx.rank(), 0);
      const AlgebraElement lhs = AlgebraElement::basis(weyl_to_basis(w, ctx), ctx) *
                                 AlgebraElement::basis(weyl_to_basis(w2, ctx), ctx);
      const AlgebraElement rhs = AlgebraElement::basis(weyl_to_basis(compose(w2, w), ctx), ctx);
      if (lhs != rhs) return mismatch("w, w' law", lhs, rhs);
      return {};
    });
  }
  run.run("summand-identity", scaled(cfg.cases, 5), [&](Lcg& rng, std::size_t) -> std::string {
    const Tuple j = random_tuple(rng, ctx.rank(), 1, ctx.n());
    const Tuple image = random_tuple(rng, static_cast<std::size_t>(ctx.n()), 1, ctx.n());
    Tuple i(ctx.rank());
    for (std::size_t k = 0; k < i.size(); ++k) i[k] = image[static_cast<std::size_t>(j[k] - 1)];
    const SummandData d = summand_data(i, j, ctx);
    if (!d.identity_holds) {
      return "xi_{i,j} xi_{j,i} != index * xi_{i,i} for i=(" + join(i) + ") j=(" + join(j) + ")";
    }
    return {};
  });
  if (ctx.n() < 2) {
    run.skip("corner-restriction", "requires n >= 2");
  } else {
    run.run("corner-restriction", scaled(cfg.cases, 2), [&](Lcg& rng, std::size_t) -> std::string {
      std::vector<std::int64_t> values;
      while (values.empty()) {
        for (std::int64_t v = 1; v <= ctx.n(); ++v) {
          if (rng.uniform(0, 1) == 1) values.push_back(v);
        }
      }
      const auto last = static_cast<std::int64_t>(values.size()) - 1;
      auto pick = [&] { return values[static_cast<std::size_t>(rng.uniform(0, last))]; };
      auto corner_symbol = [&](Tuple top) {
        Tuple bottom(ctx.rank());
        for (auto& v : bottom) v = pick() + ctx.n() * rng.uniform(-2, 2);
        return canonical(top, bottom, ctx.n());
      };
      Tuple top(ctx.rank());
      for (auto& v : top) v = pick();
      const BasisSymbol x = corner_symbol(sorted(top));
      const BasisSymbol y = corner_symbol(sorted(x.middle()));
      const AlgebraElement a = AlgebraElement::basis(x, ctx);
      const AlgebraElement b = AlgebraElement::basis(y, ctx);
      const AlgebraElement lhs = restrict_to_subset(values, a * b);
      const AlgebraElement rhs = restrict_to_subset(values, a) * restrict_to_subset(values, b);
      if (lhs != rhs) return mismatch("N=(" + join(values) + ") x=" + sym(x) + " y=" + sym(y), lhs, rhs);
      return {};
    });
  }
}

inline void rewrite_suite(const SuiteConfig& cfg, const AlgebraContext& ctx, CheckRunner& run) {
  run.run("rewrite-reexpansion", scaled(cfg.cases, 5), [&](Lcg& rng, std::size_t) -> std::string {
    const Tuple i = random_top(rng, ctx);
    const Tuple j = random_tuple(rng, ctx.rank(), 1, ctx.n());
    const Tuple eps = random_tuple(rng, ctx.rank(), -3, 3);
    const BasisSymbol x = canonical(i, fold(j, eps, ctx.n()), ctx.n());
    const auto terms = fg_rewrite(x, ctx);
    for (const auto& t : terms) {
      if (!is_absolutely_successive(t.generator.shift())) {
        return sym(x) + " produced generator " + sym(t.generator);
      }
    }
    const AlgebraElement back = rewrite_expand(terms, ctx);
    const AlgebraElement expected = AlgebraElement::basis(x, ctx);
    if (back != expected) return mismatch("re-expansion of " + sym(x), back, expected);
    return {};
  });
}

/// Lexicographically smallest element of H g K, by brute force.
inline Permutation coset_min(const std::vector<Permutation>& h, const Permutation& g,
                             const std::vector<Permutation>& k) {
  Permutation best = g;
  for (const auto& a : h) {
    const Permutation ag = a * g;
    for (const auto& b : k) best = std::min(best, ag * b);
  }
  return best;
}

/// sigma^{-1} H sigma as a Young subgroup.
inline YoungSubgroup conjugate(const YoungSubgroup& h, const Permutation& sigma) {
  std::vector<int> labels(h.degree());
  for (std::size_t k = 0; k < labels.size(); ++k) labels[k] = h.label(static_cast<std::size_t>(sigma(k)));
  return YoungSubgroup::from_labels(labels);
}

inline void cosets_suite(const SuiteConfig& cfg, CheckRunner& run) {
  const std::size_t r = std::min<std::size_t>(cfg.r, 5);
  const YoungSubgroup full = YoungSubgroup::full(r);
  const auto group = enumerate_elements(full);
  run.run("double-coset-partition", scaled(cfg.cases, 10), [&](Lcg& rng, std::size_t) -> std::string {
    const YoungSubgroup h = random_young(rng, r);
    const YoungSubgroup k = random_young(rng, r);
    const auto he = enumerate_elements(h);
    const auto ke = enumerate_elements(k);
    const auto reps = double_cosets(h, full, k);
    std::set<Permutation> classes;
    for (const auto& d : reps) {
      if (coset_min(he, d, ke) != d) return "representative is not lexicographically minimal";
      classes.insert(d);
    }
    for (const auto& g : group) {
      if (!classes.contains(coset_min(he, g, ke))) return "element outside every listed double coset";
    }
    if (classes.size() != reps.size()) return "duplicate double coset";
    return {};
  });
  run.run("double-coset-composition", scaled(cfg.cases, 10), [&](Lcg& rng, std::size_t) -> std::string {
    // H1 \ G / H3 from H1 \ G / H2 and (sigma^{-1} H1 sigma n H2) \ H2 / H3
    const YoungSubgroup h1 = random_young(rng, r);
    const YoungSubgroup h2 = random_young(rng, r);
    const YoungSubgroup h3 = refine(h2, random_young(rng, r));
    const auto h1e = enumerate_elements(h1);
    const auto h3e = enumerate_elements(h3);
    std::set<Permutation> hit;
    std::size_t composed = 0;
    for (const auto& sigma : double_cosets(h1, full, h2)) {
      const YoungSubgroup inner = refine(conjugate(h1, sigma), h2);
      for (const auto& eta : double_cosets(inner, h2, h3)) {
        ++composed;
        if (!hit.insert(coset_min(h1e, sigma * eta, h3e)).second) return "a class is hit twice";
      }
    }
    if (composed != double_cosets(h1, full, h3).size()) return "some class is missed";
    return {};
  });
}

}  // namespace detail

/// Runs one suite (or "all"); throws DomainError for unknown names.
inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw DomainError("unknown suite '" + name + "'");
  }
  const AlgebraContext ctx(cfg.n, static_cast<std::int64_t>(cfg.r), cfg.field);
  SuiteReport report{name, cfg, {}};
  detail::CheckRunner run(cfg, report.checks);
  const bool all = name == "all";
  if (all || name == "associativity") detail::associativity_suite(cfg, ctx, run);
  if (all || name == "oracle") detail::oracle_suite(cfg, ctx, run);
  if (all || name == "center") detail::center_suite(cfg, ctx, run);
  if (all || name == "laurent") detail::laurent_suite(cfg, ctx, run);
  if (all || name == "schur-weyl") detail::schur_weyl_suite(cfg, ctx, run);
  if (all || name == "rewrite") detail::rewrite_suite(cfg, ctx, run);
  if (all || name == "cosets") detail::cosets_suite(cfg, run);
  return report;
}

inline std::string reproduce_command(const SuiteReport& report) {
  const SuiteConfig& c = report.config;
  std::ostringstream out;
  out << "schur suite " << report.suite << " --n " << c.n << " --r " << c.r << " --field "
      << (c.field.is_rational() ? "rational" : "gf:" + std::to_string(c.field.characteristic()))
      << " --seed " << c.seed << " --cases " << c.cases << " --bound " << c.bound;
  return out.str();
}

inline std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  const SuiteConfig& c = report.config;
  out << "suite " << report.suite << ": n=" << c.n << " r=" << c.r << " field=" << c.field.name()
      << " seed=" << c.seed << " cases=" << c.cases << " bound=" << c.bound << "\n";
  std::size_t passed = 0, failed = 0;
  for (const auto& check : report.checks) {
    passed += check.passed;
    failed += check.failed;
    out << "  " << (check.failed == 0 ? "ok  " : "FAIL") << " " << check.name;
    if (!check.note.empty()) {
      out << " (" << check.note << ")\n";
      continue;
    }
    out << ": " << check.passed << " passed, " << check.failed << " failed\n";
    if (check.counterexample) out << "       first counterexample: " << *check.counterexample << "\n";
  }
  out << (report.ok() ? "PASS" : "FAIL") << ": " << passed << " passed, " << failed << " failed\n";
  if (!report.ok()) out << "reproduce: " << reproduce_command(report) << "\n";
  return out.str();
}

inline Json report_to_json(const SuiteReport& report) {
  const SuiteConfig& c = report.config;
  Json j = Json::object();
  j["suite"] = report.suite;
  j["config"] = {{"n", c.n},       {"r", c.r},         {"field", field_to_json(c.field)},
                 {"seed", c.seed}, {"cases", c.cases}, {"bound", c.bound}};
  Json checks = Json::array();
  for (const auto& check : report.checks) {
    Json e = Json::object();
    e["name"] = check.name;
    e["passed"] = check.passed;
    e["failed"] = check.failed;
    if (!check.note.empty()) e["note"] = check.note;
    if (check.counterexample) e["counterexample"] = *check.counterexample;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["ok"] = report.ok();
  if (!report.ok()) j["reproduce"] = reproduce_command(report);
  return j;
}

}  // namespace schur
