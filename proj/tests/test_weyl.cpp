#include <algorithm>
#include <numeric>
#include <random>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "schur/weyl.hpp"

using namespace schur;

namespace {

ExtendedWeylElement make_w(std::vector<int> one_based, Tuple shift) {
  return {Permutation::from_one_based(one_based), std::move(shift)};
}

/// All of S_r by brute force, used as an independent enumeration.
std::vector<Permutation> all_permutations(std::size_t r) {
  std::vector<int> images(r);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_zero_based(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

YoungSubgroup random_partition(std::mt19937_64& rng, std::size_t r) {
  std::vector<int> labels(r);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(r) - 1);
  for (auto& l : labels) l = pick(rng);
  return YoungSubgroup::from_labels(labels);
}

Tuple random_tuple(std::mt19937_64& rng, std::size_t r, int lo, int hi) {
  std::uniform_int_distribution<int> pick(lo, hi);
  Tuple t(r);
  for (auto& v : t) v = pick(rng);
  return t;
}

ExtendedWeylElement random_w(std::mt19937_64& rng, std::size_t r) {
  std::vector<int> images(r);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return {Permutation::from_zero_based(images), random_tuple(rng, r, -3, 3)};
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation::from_one_based({1, 1}), DomainError);
  EXPECT_THROW(Permutation::from_one_based({0, 1}), DomainError);
  EXPECT_NO_THROW(Permutation::from_one_based({2, 1}));
}

TEST(Permutation, IdentityIsNeutral) {
  const auto p = Permutation::from_one_based({3, 1, 2});
  EXPECT_EQ(p * Permutation(3), p);
  EXPECT_EQ(Permutation(3) * p, p);
  EXPECT_TRUE((p * p.inverse()).is_identity());
}

TEST(ExtendedWeyl, ComposeExamples) {
  const auto id = ExtendedWeylElement::identity(2);
  EXPECT_EQ(compose(id, id), id);

  const auto w = make_w({2, 1}, {0, 0});
  const auto shift = make_w({1, 2}, {1, 0});
  EXPECT_EQ(compose(w, shift), make_w({2, 1}, {1, 0}));

  const auto m = make_w({2, 3, 1}, {4, -1, 2});
  EXPECT_EQ(compose(m, inverse(m)), ExtendedWeylElement::identity(3));
  EXPECT_EQ(compose(inverse(m), m), ExtendedWeylElement::identity(3));
}

TEST(ExtendedWeyl, ComposeExampleSatisfiesActLawOnAllSmallTuples) {
  const auto w = make_w({2, 1}, {0, 0});
  const auto w2 = make_w({1, 2}, {1, 0});
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      const Tuple i{a, b};
      EXPECT_EQ(act(i, compose(w, w2), 2), act(act(i, w, 2), w2, 2));
    }
  }
}

TEST(ExtendedWeyl, ActExamples) {
  EXPECT_EQ(act({5, 7}, ExtendedWeylElement::identity(2), 2), (Tuple{5, 7}));
  EXPECT_EQ(act({1, 2}, make_w({1, 2}, {1, 0}), 2), (Tuple{3, 2}));
  EXPECT_EQ(act({1, 2}, make_w({2, 1}, {0, 1}), 2), (Tuple{2, 3}));
}

TEST(ExtendedWeyl, ActErrors) {
  EXPECT_THROW(act({1, 2}, ExtendedWeylElement::identity(2), 0), DomainError);
  EXPECT_THROW(act({1, 2, 3}, ExtendedWeylElement::identity(2), 1), DomainError);
  EXPECT_THROW(act({INT64_MAX, 0}, make_w({1, 2}, {1, 0}), 2), DomainError);
}

TEST(ExtendedWeyl, RightActionLawRandom) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t r = 1 + rng() % 5;
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 4);
    const auto w = random_w(rng, r);
    const auto w2 = random_w(rng, r);
    const auto i = random_tuple(rng, r, -10, 10);
    ASSERT_EQ(act(i, compose(w, w2), n), act(act(i, w, n), w2, n));
  }
}

TEST(ExtendedWeyl, Associativity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t r = 1 + rng() % 5;
    const auto a = random_w(rng, r), b = random_w(rng, r), c = random_w(rng, r);
    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(ExtendedWeyl, StabilizerOfRangeTupleHasNoShifts) {
  // For i with entries in 1..n, (sigma, eps) fixes i only when eps = 0.
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (const Tuple& i : {Tuple{1, 1, 1}, Tuple{1, 2, 1}, Tuple{3, 1, 2}}) {
      if (*std::max_element(i.begin(), i.end()) > n) continue;
      for (const auto& sigma : all_permutations(3)) {
        for (int a = -2; a <= 2; ++a) {
          for (int b = -2; b <= 2; ++b) {
            for (int c = -2; c <= 2; ++c) {
              const ExtendedWeylElement w{sigma, {a, b, c}};
              if (act(i, w, n) == i) {
                EXPECT_TRUE(a == 0 && b == 0 && c == 0);
                EXPECT_TRUE(stabilizer_of(i).contains(sigma));
              }
            }
          }
        }
      }
    }
  }
}

TEST(YoungSubgroup, StabilizerExamples) {
  EXPECT_EQ(stabilizer_of(Tuple{1, 1, 2}), YoungSubgroup::from_blocks(3, {{1, 2}, {3}}));
  EXPECT_EQ(stabilizer_of(Tuple{1, 1, 2}, Tuple{3, 4, 4}), YoungSubgroup::trivial(3));
  EXPECT_EQ(stabilizer_of(Tuple{5, 5, 5, 5}), YoungSubgroup::full(4));
  EXPECT_THROW(stabilizer(std::vector<Tuple>{}), DomainError);
}

TEST(YoungSubgroup, BlocksSortedByLeastElement) {
  const auto h = stabilizer_of(Tuple{2, 1, 2, 3, 1});
  const std::vector<std::vector<int>> expected{{0, 2}, {1, 4}, {3}};
  EXPECT_EQ(h.blocks(), expected);
  EXPECT_THROW(YoungSubgroup::from_blocks(3, {{1, 2}}), DomainError);
  EXPECT_THROW(YoungSubgroup::from_blocks(3, {{1, 2}, {2, 3}}), DomainError);
}

TEST(YoungSubgroup, RefineLaws) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 6;
    const auto p = random_partition(rng, r), q = random_partition(rng, r),
               s = random_partition(rng, r);
    EXPECT_EQ(refine(p, p), p);
    EXPECT_EQ(refine(p, q), refine(q, p));
    EXPECT_EQ(refine(refine(p, q), s), refine(p, refine(q, s)));
    EXPECT_TRUE(refine(p, q).refines(p));
  }
}

TEST(YoungSubgroup, StabilizerOfPairIsRefinement) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 6;
    const auto a = random_tuple(rng, r, 0, 2), b = random_tuple(rng, r, 0, 2);
    EXPECT_EQ(refine(stabilizer_of(a), stabilizer_of(b)), stabilizer_of(a, b));
  }
}

TEST(YoungSubgroup, OrderAndIndex) {
  EXPECT_EQ(subgroup_order(YoungSubgroup::from_blocks(3, {{1, 2}, {3}})), 2);
  EXPECT_EQ(subgroup_order(YoungSubgroup::trivial(3)), 1);
  EXPECT_EQ(subgroup_order(YoungSubgroup::full(4)), 24);
  EXPECT_EQ(subgroup_order(YoungSubgroup::full(25)), factorial(25));

  const auto full3 = YoungSubgroup::full(3);
  EXPECT_EQ(subgroup_index(full3, YoungSubgroup::from_blocks(3, {{1, 2}, {3}})), 3);
  EXPECT_EQ(subgroup_index(full3, full3), 1);
  EXPECT_EQ(subgroup_index(YoungSubgroup::from_blocks(4, {{1, 2}, {3, 4}}),
                           YoungSubgroup::trivial(4)),
            4);
  EXPECT_THROW(subgroup_index(YoungSubgroup::trivial(3), full3), DomainError);
}

TEST(YoungSubgroup, IndexMultiplicativeAlongChains) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 7;
    const auto h = random_partition(rng, r);
    const auto j = refine(h, random_partition(rng, r));
    const auto k = refine(j, random_partition(rng, r));
    EXPECT_EQ(subgroup_index(h, k), subgroup_index(h, j) * subgroup_index(j, k));
  }
}

TEST(YoungSubgroup, EnumerateElementsMatchesBruteForce) {
  EXPECT_EQ(enumerate_elements(YoungSubgroup::trivial(2)), std::vector<Permutation>{Permutation(2)});
  const auto s2 = enumerate_elements(YoungSubgroup::full(2));
  ASSERT_EQ(s2.size(), 2u);
  EXPECT_TRUE(s2[0].is_identity());
  EXPECT_EQ(s2[1], Permutation::from_one_based({2, 1}));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng() % 5;
    const auto h = random_partition(rng, r);
    std::vector<Permutation> expected;
    for (const auto& p : all_permutations(r)) {
      if (h.contains(p)) expected.push_back(p);
    }
    EXPECT_EQ(enumerate_elements(h), expected);  // both in lexicographic order
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(expected.size())), subgroup_order(h));
  }
  EXPECT_EQ(enumerate_elements(YoungSubgroup::from_blocks(4, {{1, 2}, {3, 4}})).size(), 4u);
}

TEST(YoungSubgroup, EnumerationLimit) {
  EXPECT_THROW(enumerate_elements(YoungSubgroup::full(5), 100), EnumerationLimitError);
  EXPECT_NO_THROW(enumerate_elements(YoungSubgroup::full(5), 120));
  EXPECT_THROW(double_cosets(YoungSubgroup::trivial(9), YoungSubgroup::full(9),
                             YoungSubgroup::trivial(9)),
               EnumerationLimitError);
}

TEST(DoubleCosets, Examples) {
  const auto t2 = YoungSubgroup::trivial(2);
  EXPECT_EQ(double_cosets(t2, t2, t2), std::vector<Permutation>{Permutation(2)});
  EXPECT_EQ(double_cosets(t2, YoungSubgroup::full(2), t2).size(), 2u);
  const auto h = YoungSubgroup::from_blocks(3, {{1, 2}, {3}});
  EXPECT_EQ(double_cosets(h, YoungSubgroup::full(3), h).size(), 2u);
  EXPECT_THROW(double_cosets(YoungSubgroup::full(3), h, h), DomainError);
}

TEST(DoubleCosets, PartitionGroupExactlyOnceBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + rng() % 5;
    const auto g = random_partition(rng, r);
    const auto h = refine(g, random_partition(rng, r));
    const auto k = refine(g, random_partition(rng, r));
    const auto reps = double_cosets(h, g, k);
    const auto gs = enumerate_elements(g);
    const auto hs = enumerate_elements(h);
    const auto ks = enumerate_elements(k);
    std::map<Permutation, int> hits;
    for (const auto& d : reps) {
      std::set<Permutation> coset;
      for (const auto& a : hs) {
        for (const auto& b : ks) coset.insert(a * d * b);
      }
      // Chosen representative is the lexicographically smallest.
      EXPECT_EQ(*coset.begin(), d);
      for (const auto& x : coset) ++hits[x];
    }
    ASSERT_EQ(hits.size(), gs.size());
    for (const auto& x : gs) EXPECT_EQ(hits[x], 1);
  }
}
