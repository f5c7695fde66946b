#include <gtest/gtest.h>

#include <set>

#include "schur/io.hpp"
#include "schur/random.hpp"
#include "schur/rewrite.hpp"

using namespace schur;

namespace {

/// Absolutely successive tuples by brute force over {0..r-1}^r.
std::vector<Tuple> brute_force_generators(std::size_t r) {
  std::vector<Tuple> out;
  Tuple t(r, 0);
  const auto top = static_cast<std::int64_t>(r) - 1;
  while (true) {
    std::set<std::int64_t> values(t.begin(), t.end());
    bool consecutive = *values.begin() == 0;
    std::int64_t expect = 0;
    for (auto v : values) consecutive = consecutive && v == expect++;
    if (consecutive) out.push_back(t);
    std::size_t k = r;
    while (k > 0 && t[k - 1] == top) t[--k] = 0;
    if (k == 0) break;
    ++t[k - 1];
  }
  return out;
}

}  // namespace

TEST(Successive, Predicates) {
  EXPECT_TRUE(is_successive({3, 1, 2, 2}));
  EXPECT_FALSE(is_successive({0, 2}));
  EXPECT_TRUE(is_absolutely_successive({1, 0, 1}));
  EXPECT_FALSE(is_absolutely_successive({1, 2}));
  EXPECT_FALSE(is_absolutely_successive({0, 2}));
}

TEST(Generators, Enumeration) {
  const AlgebraContext ctx(2, 1);
  EXPECT_EQ(fg_generators({1}, {2}, ctx), (std::vector<Tuple>{{0}}));
  EXPECT_EQ(fg_generators({1, 2}, {2, 1}, AlgebraContext(2, 2)),
            (std::vector<Tuple>{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(fg_generators({1, 1, 1}, {1, 1, 1}, AlgebraContext(1, 3)).size(), 13u);
  for (std::size_t r = 1; r <= 6; ++r) {
    EXPECT_EQ(absolutely_successive_tuples(r), brute_force_generators(r)) << "r = " << r;
  }
  EXPECT_THROW(fg_generators({3}, {1}, ctx), DomainError);
}

TEST(Generators, Blockwise) {
  const AlgebraContext ctx(2, 3);
  const auto blockwise = fg_generators_blockwise({1, 1, 2}, {1, 1, 2}, ctx);
  // blocks of sizes 2 and 1: 3 * 1 choices
  EXPECT_EQ(blockwise, (std::vector<Tuple>{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(fg_generators_blockwise({1, 1, 1}, {1, 1, 1}, ctx), absolutely_successive_tuples(3));
  EXPECT_THROW(fg_generators_blockwise({2, 1, 1}, {1, 1, 1}, ctx), DomainError);
}

TEST(Rewrite, Examples) {
  const AlgebraContext ctx(2, 2);
  const BasisSymbol generator = canonical({1, 2}, {3, 2}, 2);
  const auto single = fg_rewrite(generator, ctx);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].diag_shift, (Tuple{0, 0}));
  EXPECT_TRUE(single[0].coeff.is_one());
  EXPECT_EQ(single[0].generator, generator);

  const BasisSymbol uniform = canonical({1, 2}, {2 + 4, 1 + 4}, 2);
  const auto shifted = fg_rewrite(uniform, ctx);
  ASSERT_EQ(shifted.size(), 1u);
  EXPECT_EQ(shifted[0].diag_shift, (Tuple{2, 2}));
  EXPECT_EQ(shifted[0].generator, canonical({1, 2}, {2, 1}, 2));

  const BasisSymbol target = canonical({1, 2}, {5, 2}, 2);
  EXPECT_EQ(rewrite_expand(fg_rewrite(target, ctx), ctx), AlgebraElement::basis(target, ctx));
}

TEST(Rewrite, GapAboveSecondValue) {
  const AlgebraContext ctx(1, 4);
  const BasisSymbol x = canonical({1, 1, 1, 1}, {1, 2, 3, 5}, 1);
  const auto terms = fg_rewrite(x, ctx);
  EXPECT_EQ(rewrite_expand(terms, ctx), AlgebraElement::basis(x, ctx));
  for (const auto& t : terms) EXPECT_TRUE(is_absolutely_successive(t.generator.shift()));
}

TEST(Rewrite, RandomReexpansion) {
  Lcg rng(41);
  for (const Field f : {Field::rational(), Field::prime(3)}) {
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {1, 3}, {3, 2}}) {
      const AlgebraContext ctx(n, static_cast<std::size_t>(r), f);
      for (int trial = 0; trial < 20; ++trial) {
        const Tuple i = random_top(rng, ctx);
        const Tuple j = random_tuple(rng, ctx.rank(), 1, n);
        const Tuple eps = random_tuple(rng, ctx.rank(), -3, 3);
        const BasisSymbol x = canonical(i, fold(j, eps, n), n);
        const auto terms = fg_rewrite(x, ctx);
        EXPECT_EQ(rewrite_expand(terms, ctx), AlgebraElement::basis(x, ctx)) << format_symbol(x);
        for (const auto& t : terms) {
          EXPECT_TRUE(is_absolutely_successive(t.generator.shift())) << format_symbol(t.generator);
          EXPECT_EQ(t.generator.top(), x.top());
        }
      }
    }
  }
}
