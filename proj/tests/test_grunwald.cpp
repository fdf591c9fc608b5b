#include <gtest/gtest.h>

#include <random>

#include "abelian/errors.hpp"
#include "abelian/grunwald.hpp"
#include "oracles.hpp"

using namespace abelian;

TEST(Grunwald, CubicWithoutConstraints) {
  auto t = construct_cyclic({3, {}, rationals(), std::nullopt});
  EXPECT_EQ(t.chosen_ells, (std::vector<u64>{7}));
  EXPECT_EQ(t.modulus, 7u);
  std::vector<Residue> six{6};
  EXPECT_EQ(t.result, fixed_field(7, six));
  EXPECT_EQ(t.character, (std::vector<u64>{1}));
}

TEST(Grunwald, QuinticSplittingTwoAndThree) {
  std::vector<u64> split{2, 3};
  auto t = construct_cyclic({5, split, rationals(), std::nullopt});
  EXPECT_EQ(t.chosen_ells, (std::vector<u64>{11, 31, 41}));
  EXPECT_EQ(t.result.degree(), 5u);
  const auto pre = projection_preimage(unit_group(t.modulus), t.result.fixing_subgroup());
  EXPECT_TRUE(pre.contains(2));
  EXPECT_TRUE(pre.contains(3));
  EXPECT_EQ(splitting_data(t.result, 2).local_degree, 1u);
  EXPECT_EQ(splitting_data(t.result, 3).local_degree, 1u);
  // the character kills both Frobenius vectors
  for (const auto& w : t.frobenius_vectors) {
    u64 dot = 0;
    for (std::size_t i = 0; i < w.coordinates.size(); ++i) dot += w.coordinates[i] * t.character[i];
    EXPECT_EQ(dot % 5, 0u);
  }
}

TEST(Grunwald, QuadraticAvoidingZeta3) {
  auto t = construct_cyclic({2, {}, cyclotomic_field(3), std::nullopt});
  EXPECT_EQ(t.chosen_ells, (std::vector<u64>{5}));
  std::vector<Residue> four{4};
  EXPECT_EQ(t.result, fixed_field(5, four));
  EXPECT_TRUE(intersection(t.result, cyclotomic_field(3)).is_rational());
}

TEST(Grunwald, Errors) {
  EXPECT_THROW(construct_cyclic({4, {}, rationals(), std::nullopt}), ValidationError);
  std::vector<u64> bad{4};
  EXPECT_THROW(construct_cyclic({3, bad, rationals(), std::nullopt}), ValidationError);
  std::vector<u64> split{2, 3};
  EXPECT_THROW(construct_cyclic({5, split, rationals(), 40}), SearchExhausted);
}

TEST(Grunwald, FirstNullVector) {
  // x + y + z = 0 over GF(5): first free column is y
  EXPECT_EQ(first_null_vector({{1, 1, 1}}, 3, 5), (std::vector<u64>{4, 1, 0}));
  EXPECT_EQ(first_null_vector({}, 2, 3), (std::vector<u64>{1, 0}));
  EXPECT_EQ(first_null_vector({{0, 2}}, 2, 3), (std::vector<u64>{1, 0}));
}

TEST(Grunwald, ContractOverSmallPrimeSets) {
  const std::vector<u64> pool{2, 3, 5, 7, 11};
  std::mt19937_64 rng(1);
  for (u64 q : {2u, 3u, 5u, 7u}) {
    for (unsigned mask = 0; mask < 32; ++mask) {
      if (__builtin_popcount(mask) > 3) continue;
      std::vector<u64> split;
      for (unsigned i = 0; i < 5; ++i)
        if (mask >> i & 1) split.push_back(pool[i]);
      u64 m = 1 + rng() % 200;
      auto us = oracle::units(m);
      std::vector<Residue> gens{us[rng() % us.size()]};
      auto avoid = fixed_field(m, gens);
      auto t = construct_cyclic({q, split, avoid, std::nullopt});
      ASSERT_EQ(t.result.degree(), q);
      ASSERT_EQ(t.chosen_ells.size(), split.size() + 1);
      for (u64 ell : t.chosen_ells) {
        EXPECT_EQ(ell % q, 1u);
        EXPECT_NE(avoid.conductor() % ell, 0u);
        EXPECT_EQ(std::count(split.begin(), split.end(), ell), 0);
      }
      for (u64 p : split) EXPECT_TRUE(totally_split(t.result, p)) << q << " " << p;
      EXPECT_TRUE(intersection(t.result, avoid).is_rational());
      auto again = construct_cyclic({q, split, avoid, std::nullopt});
      EXPECT_EQ(again.result, t.result);
      EXPECT_EQ(again.character, t.character);
      EXPECT_EQ(again.frobenius_vectors, t.frobenius_vectors);
    }
  }
}
