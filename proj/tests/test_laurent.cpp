#include <gtest/gtest.h>

#include "schur/laurent_form.hpp"
#include "schur/random.hpp"

using namespace schur;

namespace {

Scalar q(long v) { return Scalar::from_integer(Field::rational(), v); }

LaurentPoly t(std::size_t r, std::size_t k) { return LaurentPoly::variable(r, Field::rational(), k); }

AlgebraElement xi_eps(const Tuple& eps, const AlgebraContext& ctx) {
  return diagonal_element(ones(ctx.rank()), eps, ctx);
}

/// Partitions of m into parts of size at most k, by the standard recurrence.
/// Partitions into at most r parts are equinumerous by conjugation.
long partitions_parts_at_most(long m, long k) {
  std::vector<std::vector<long>> p(m + 1, std::vector<long>(k + 1, 0));
  for (long c = 0; c <= k; ++c) p[0][c] = 1;
  for (long s = 1; s <= m; ++s) {
    for (long c = 1; c <= k; ++c) {
      p[s][c] = p[s][c - 1] + (s >= c ? p[s - c][c] : 0);
    }
  }
  return p[m][k];
}

}  // namespace

TEST(Generators, Shapes) {
  const AlgebraContext ctx(1, 2);
  const AlgebraElement t1 = t_generator(1, ctx);
  ASSERT_EQ(t1.size(), 1u);
  EXPECT_EQ(t1.terms().begin()->first.bottom(), (Tuple{1, 2}));
  EXPECT_EQ(t_generator(2, ctx).terms().begin()->first.bottom(), (Tuple{2, 2}));
  EXPECT_EQ(t_r_inverse(ctx).terms().begin()->first.bottom(), (Tuple{0, 0}));
  EXPECT_THROW(t_generator(0, ctx), DomainError);
  EXPECT_THROW(t_generator(3, ctx), DomainError);
}

TEST(Generators, InverseAndCommutation) {
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {1, 3}, {2, 3}}) {
    const AlgebraContext ctx(n, static_cast<std::size_t>(r));
    const AlgebraElement unit = idempotent(ones(ctx.rank()), ctx);
    EXPECT_EQ(t_generator(ctx.rank(), ctx) * t_r_inverse(ctx), unit);
    EXPECT_EQ(t_r_inverse(ctx) * t_generator(ctx.rank(), ctx), unit);
    for (std::size_t a = 1; a <= ctx.rank(); ++a) {
      for (std::size_t b = 1; b <= ctx.rank(); ++b) {
        EXPECT_EQ(t_generator(a, ctx) * t_generator(b, ctx), t_generator(b, ctx) * t_generator(a, ctx));
      }
    }
  }
}

TEST(Generators, SquareOfFirst) {
  // t_1^2 = xi^{(2,0)} + 2 xi^{(1,1)}
  const AlgebraContext ctx(1, 2);
  EXPECT_EQ(t_generator(1, ctx) * t_generator(1, ctx), xi_eps({2, 0}, ctx) + q(2) * xi_eps({1, 1}, ctx));
}

TEST(NormalForm, Examples) {
  for (const std::int64_t n : {1, 2, 3}) {
    const AlgebraContext ctx(n, 2);
    EXPECT_EQ(laurent_normal_form(xi_eps({0, 0}, ctx)), LaurentPoly::one(2, Field::rational()));
    EXPECT_EQ(laurent_normal_form(t_generator(1, ctx)), t(2, 1));
    EXPECT_EQ(laurent_normal_form(t_generator(2, ctx)), t(2, 2));
    EXPECT_EQ(format_laurent(laurent_normal_form(xi_eps({2, 0}, ctx))), "t1^2 - 2*t2");
    EXPECT_EQ(format_laurent(laurent_normal_form(xi_eps({0, -1}, ctx))), "t1*t2^-1");
    EXPECT_EQ(format_laurent(laurent_normal_form(t_r_inverse(ctx))), "t2^-1");
  }
}

TEST(NormalForm, RejectsOutsideCorner) {
  const AlgebraContext ctx(2, 2);
  EXPECT_THROW(laurent_normal_form(symbol_element({1, 2}, {1, 2}, ctx)), DomainError);
  EXPECT_THROW(laurent_normal_form(symbol_element({1, 1}, {1, 2}, ctx)), DomainError);
}

TEST(NormalForm, EvaluateExample) {
  const AlgebraContext ctx(1, 2);
  EXPECT_EQ(laurent_evaluate(t(2, 1) * t(2, 1) - q(2) * t(2, 2), ctx), xi_eps({2, 0}, ctx));
  EXPECT_EQ(laurent_evaluate(LaurentPoly::one(2, Field::rational()), ctx), xi_eps({0, 0}, ctx));
}

TEST(NormalForm, RoundTripAndMultiplicativity) {
  Lcg rng(5);
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}}) {
    const AlgebraContext ctx(n, static_cast<std::size_t>(r));
    for (int trial = 0; trial < 25; ++trial) {
      const AlgebraElement x = xi_eps(random_tuple(rng, ctx.rank(), -2, 2), ctx);
      const AlgebraElement y = xi_eps(random_tuple(rng, ctx.rank(), -2, 2), ctx);
      const LaurentPoly px = laurent_normal_form(x);
      EXPECT_EQ(laurent_evaluate(px, ctx), x);
      EXPECT_EQ(laurent_normal_form(x * y), px * laurent_normal_form(y));
    }
  }
}

TEST(NormalForm, PolynomialRoundTrip) {
  const AlgebraContext ctx(2, 3);
  const LaurentPoly p = q(3) * (t(3, 1) * t(3, 2)) - t(3, 3) +
                        LaurentPoly::monomial({0, 1, -2}, Scalar::one(Field::rational()));
  EXPECT_EQ(laurent_normal_form(laurent_evaluate(p, ctx)), p);
}

TEST(NormalForm, PrimeField) {
  const AlgebraContext ctx(1, 2, Field::prime(2));
  const LaurentPoly nf = laurent_normal_form(diagonal_element(ones(2), {2, 0}, ctx));
  EXPECT_EQ(format_laurent(nf), "t1^2");
}

TEST(GradedDimension, MatchesPartitionCount) {
  const std::vector<long> expected{1, 1, 2, 3, 4, 5, 7, 8, 10};
  for (long m = 0; m <= 8; ++m) {
    EXPECT_EQ(graded_dimension(3, m), expected[static_cast<std::size_t>(m)]);
    EXPECT_EQ(partitions_parts_at_most(m, 3), expected[static_cast<std::size_t>(m)]);
  }
  for (std::size_t r = 1; r <= 6; ++r) {
    for (long m = 0; m <= 15; ++m) {
      EXPECT_EQ(graded_dimension(r, m), partitions_parts_at_most(m, static_cast<long>(r)));
    }
  }
  EXPECT_EQ(graded_dimension(1, 40), 1);
  EXPECT_THROW(graded_dimension(2, -1), DomainError);
}

TEST(MatrixForm, ExamplesAndProductRule) {
  const AlgebraContext ctx2(2, 1);
  const auto one_term = matrix_laurent_form(symbol_element({1}, {1}, ctx2));
  ASSERT_EQ(one_term.size(), 1u);
  EXPECT_EQ(one_term[0], (MatrixLaurentTerm{1, 1, 0, q(1)}));
  EXPECT_EQ(matrix_laurent_form(symbol_element({1}, {4}, ctx2))[0], (MatrixLaurentTerm{1, 2, 1, q(1)}));
  EXPECT_THROW(matrix_laurent_form(one(AlgebraContext(2, 2))), DomainError);

  const AlgebraContext ctx(3, 1);
  Lcg rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const BasisSymbol x = random_symbol(rng, ctx, 6);
    const BasisSymbol y = random_symbol(rng, ctx, 6);
    const auto a = matrix_laurent_form(AlgebraElement::basis(x, ctx))[0];
    const auto b = matrix_laurent_form(AlgebraElement::basis(y, ctx))[0];
    const auto product = matrix_laurent_form(AlgebraElement::basis(x, ctx) * AlgebraElement::basis(y, ctx));
    if (a.col != b.row) {
      EXPECT_TRUE(product.empty());
    } else {
      ASSERT_EQ(product.size(), 1u);
      EXPECT_EQ(product[0], (MatrixLaurentTerm{a.row, b.col, a.power + b.power, q(1)}));
    }
  }
}
