// Copyright 2026 The bettishape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bettishape/bettishape.hpp"
#include "oracles.hpp"

namespace bettishape::regular {
namespace {

BettiVector vec(std::vector<Rational> xs) { return BettiVector(std::move(xs)); }

TEST(RegularCone, FacetsAndRays) {
  const auto f = facets(2);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].functional, chi(0, 2));
  EXPECT_EQ(f[1].functional, chi(1, 2));
  EXPECT_EQ(f[2].functional, chi(2, 2));
  EXPECT_EQ(f[0].name, "chi[0,2]");
  ASSERT_EQ(facets(0).size(), 1u);
  EXPECT_EQ(facets(0)[0].functional, LinearFunctional::coordinate(0));
  EXPECT_EQ(rays(2), (std::vector<BettiVector>{vec({1, 0, 0}), vec({1, 1, 0}), vec({0, 1, 1})}));
  EXPECT_EQ(rays(1), (std::vector<BettiVector>{vec({1, 0}), vec({1, 1})}));
  EXPECT_THROW(facets(-1), DomainError);
}

TEST(RegularCone, Membership) {
  EXPECT_TRUE(member(vec({1, 3, 3, 1})));
  EXPECT_FALSE(member(vec({0, 1, 0})));
  EXPECT_EQ(violations(vec({0, 1, 0})), (std::vector<std::string>{"chi[0,2]"}));
  EXPECT_TRUE(member(BettiVector::zero(4)));
}

TEST(RegularCone, DecomposeExamples) {
  EXPECT_EQ(decompose(vec({1, 2, 1})).a, (std::vector<Rational>{0, 1, 1}));
  EXPECT_EQ(decompose(vec({1, 3, 3, 1})).a, (std::vector<Rational>{0, 1, 2, 1}));
  for (int n = 0; n <= 8; ++n) {
    std::vector<Rational> expect(static_cast<std::size_t>(n) + 1);
    expect[0] = 1;
    EXPECT_EQ(decompose(rho(-1, n)).a, expect);
  }
  try {
    decompose(vec({0, 1, 0}));
    FAIL() << "expected NotInCone";
  } catch (const NotInCone& e) {
    EXPECT_EQ(e.constraint(), "chi[0,2]");
  }
}

TEST(RegularCone, RandomCombinationsRoundTrip) {
  std::mt19937 gen(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = trial % 9;
    std::vector<Rational> a;
    BettiVector v = BettiVector::zero(n);
    for (int i = -1; i <= n - 1; ++i) {
      a.push_back(oracles::random_nonnegative(gen));
      v = v + a.back() * rho(i, n);
    }
    ASSERT_TRUE(member(v));
    const auto d = decompose(v);
    EXPECT_EQ(d.a, a);
    EXPECT_EQ(d.reconstruct(), v);
    EXPECT_EQ(d.a, oracles::regular_coeffs(v));
  }
}

TEST(RegularCone, MembershipAgreesWithBackSubstitution) {
  std::mt19937 gen(32);
  for (int trial = 0; trial < 500; ++trial) {
    const auto v = oracles::random_vector(gen, trial % 7);
    const auto a = oracles::regular_coeffs(v);
    const bool nonneg = std::ranges::all_of(a, [](const Rational& x) { return x >= 0; });
    EXPECT_EQ(member(v), nonneg);
    EXPECT_EQ(coordinates(v).a, a);
  }
}

TEST(Classify, Examples) {
  for (int n = 1; n <= 8; ++n) {
    const auto c = classify(rho(0, n));
    EXPECT_TRUE(c.realizable);
    EXPECT_EQ(c.depth, n - 1);
    EXPECT_TRUE(c.cm_choice_exists);
  }
  const auto ones = classify(vec({1, 1, 1, 1}));
  EXPECT_TRUE(ones.member_of_closure);
  EXPECT_FALSE(ones.realizable);
  EXPECT_EQ(ones.decomposition.a, (std::vector<Rational>{0, 1, 0, 1}));

  const auto koszul = classify(vec({1, 3, 3, 1}));
  EXPECT_TRUE(koszul.realizable);
  EXPECT_EQ(koszul.depth, 0);
  EXPECT_TRUE(koszul.cm_choice_exists);

  const auto free_module = classify(vec({2, 0, 0}));
  EXPECT_TRUE(free_module.realizable);
  EXPECT_EQ(free_module.depth, 2);
  EXPECT_FALSE(free_module.cm_choice_exists);

  const auto outside = classify(vec({0, 1, 0}));
  EXPECT_FALSE(outside.member_of_closure);
  EXPECT_FALSE(outside.realizable);
  EXPECT_FALSE(outside.depth.has_value());

  const auto zero = classify(BettiVector::zero(3));
  EXPECT_TRUE(zero.realizable);
  EXPECT_FALSE(zero.depth.has_value());
}

TEST(Classify, DepthMatchesPositivePrefix) {
  std::mt19937 gen(33);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 8;
    const int m = std::uniform_int_distribution<int>(-1, n - 1)(gen);
    BettiVector v = oracles::random_nonnegative(gen) * rho(-1, n);
    for (int i = 0; i <= m; ++i) v = v + Rational(1 + trial % 5 + i) * rho(i, n);
    const auto c = classify(v);
    if (v.is_zero()) continue;
    EXPECT_TRUE(c.realizable);
    EXPECT_EQ(c.depth, n - 1 - m);
    // an interior zero breaks realizability
    if (m >= 1) {
      const auto holed = v - Rational(1 + trial % 5) * rho(0, n);
      EXPECT_FALSE(classify(holed).realizable);
    }
  }
}

}  // namespace
}  // namespace bettishape::regular
