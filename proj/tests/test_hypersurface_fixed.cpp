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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "bettishape/bettishape.hpp"
#include "oracles.hpp"

namespace bettishape::fixed {
namespace {

TEST(FixedCone, Params) {
  EXPECT_THROW(FixedConeParams(1, 3), DomainError);
  EXPECT_THROW(FixedConeParams(3, 1), DomainError);
  EXPECT_TRUE(FixedConeParams(3, 2).simplicial());
  EXPECT_FALSE(FixedConeParams(3, 3).simplicial());
}

TEST(FixedCone, Rays) {
  const auto r = rays({2, 3});
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(oracles::prefix(r[2].value, 3), (oracles::RVec{frac(2, 3), 1, 1}));
  EXPECT_EQ(oracles::prefix(r[3].value, 3), (oracles::RVec{frac(1, 3), 1, 1}));
  EXPECT_EQ(r[2].name, "tau^3[0]");
  const auto dedup = rays({2, 2});
  ASSERT_EQ(dedup.size(), 3u);
  EXPECT_EQ(oracles::prefix(dedup[2].value, 3), (oracles::RVec{frac(1, 2), 1, 1}));
  EXPECT_EQ(tau_d(0, 2, 2), tau_d(1, 2, 2));
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(static_cast<int>(rays({n, 2}).size()), n + 1);
}

TEST(FixedCone, MemberExamples) {
  for (int d = 2; d <= 10; ++d) {
    const auto w = Rational(d) * tau_d(1, 2, d);
    EXPECT_EQ(oracles::prefix(w, 4), (oracles::RVec{1, d, d, d}));
    EXPECT_TRUE(member(w, {2, d}).member) << d;
  }
  const auto r = member(tau_inf(2), {3, 2});
  EXPECT_FALSE(r.member);
  EXPECT_EQ(r.violated, (std::vector<std::string>{"xi^2[1,3]"}));
  EXPECT_EQ(xi(1, 3, 2)(tau_inf(2)), -1);
  EXPECT_EQ(xi(2, 3, 2)(tau_inf(2)), 1);
  EXPECT_TRUE(member(TailPeriodicSequence(), {3, 4}).member);
}

TEST(FixedCone, MembershipAgreesWithOracle) {
  std::mt19937 gen(51);
  int members = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 2 + trial % 4;
    const int d = 2 + trial % 5;
    const FixedConeParams p(n, d);
    TailPeriodicSequence w;
    for (const auto& r : rays(p)) w = w + oracles::random_nonnegative(gen, 6, 3) * r.value;
    std::vector<Rational> kick(static_cast<std::size_t>(n) + 1);
    kick[static_cast<std::size_t>(trial % (n + 1))] = oracles::random_rational(gen, 4, 3);
    if (trial % 3 != 0) w = w + embed(BettiVector(kick));
    const oracle::ConeDescription cone{n + 1, verify::project(rays(p), n), std::nullopt};
    bool tail_ok = true;
    for (int i = n; i < n + 8; ++i) tail_ok = tail_ok && w.entry(i) == w.entry(n);
    const bool expected = tail_ok && oracle::contains(cone, verify::project(w, n));
    EXPECT_EQ(member(w, p).member, expected) << trial;
    members += expected ? 1 : 0;
  }
  EXPECT_GT(members, 100);
  EXPECT_LT(members, 590);
}

TEST(FixedCone, LinearRelation) {
  for (int n = 2; n <= 7; ++n) {
    for (int d = 3; d <= 7; ++d) {
      const FixedConeParams p(n, d);
      const auto c = linear_relation(p);
      const auto cols = verify::project(rays(p), n);
      oracles::RMat m(static_cast<std::size_t>(n) + 1);
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (const auto& col : cols) m[i].push_back(col[i]);
      }
      EXPECT_EQ(oracles::gauss_rank(m), n + 1);
      const auto k = *oracles::kernel_vector(m);
      for (std::size_t r = 0; r < c.size(); ++r) EXPECT_EQ(c[r], c.back() / k.back() * k[r]);
    }
  }
  EXPECT_THROW(linear_relation({3, 2}), DomainError);
}

TEST(FixedCone, DecomposeExamples) {
  const FixedConeParams p(2, 3);
  const auto a = decompose(Rational(3) * tau_d(1, 2, 3), p);
  EXPECT_EQ(a.coefficients, (std::vector<Rational>{0, 0, 0, 3}));
  const auto b = decompose(embed(rho(-1, 2)) + tau_d(0, 2, 3), p, TriangulationLabel::OmitOdd);
  EXPECT_EQ(b.coefficients, (std::vector<Rational>{1, 0, 1, 0}));
  EXPECT_THROW(decompose(tau_inf(2), {3, 2}), NotInCone);
}

TEST(FixedCone, RandomCombinationsRoundTrip) {
  std::mt19937 gen(52);
  for (int trial = 0; trial < 1000; ++trial) {
    const FixedConeParams p(2 + trial % 5, 2 + (trial / 5) % 6);
    const auto named = rays(p);
    TailPeriodicSequence w;
    for (const auto& r : named) {
      if (gen() % 3 != 0) w = w + oracles::random_nonnegative(gen) * r.value;
    }
    const auto which = trial % 2 == 0 ? TriangulationLabel::OmitOdd : TriangulationLabel::OmitEven;
    const auto d = decompose(w, p, which);
    TailPeriodicSequence sum;
    std::vector<oracles::RVec> used;
    for (std::size_t k = 0; k < named.size(); ++k) {
      EXPECT_GE(d.coefficients[k], 0);
      sum = sum + d.coefficients[k] * named[k].value;
    }
    for (int k : d.simplex_used) {
      used.push_back(verify::project(named[static_cast<std::size_t>(k)].value, p.n));
    }
    EXPECT_EQ(sum, w);
    EXPECT_EQ(oracles::gauss_rank(used), static_cast<int>(used.size()));
  }
}

TEST(Containment, Examples) {
  const auto total = containment_report({4, 2});
  EXPECT_TRUE(total.contained_in_total);
  EXPECT_FALSE(total.contained_in_other.has_value());

  const auto up = containment_report({3, 2}, FixedConeParams(3, 5));
  EXPECT_TRUE(up.contained_in_total);
  ASSERT_TRUE(up.contained_in_other.has_value());
  EXPECT_TRUE(*up.contained_in_other);
  const auto& tau = up.rays.back();
  EXPECT_EQ(tau.ray, "tau^2[1]");
  ASSERT_TRUE(tau.other_certificate.has_value());
  // tau^2_1 = a tau^5_1 + b tau^5_2 with a, b >= 0
  const auto& c = tau.other_certificate->coefficients;
  const auto other = rays({3, 5});
  TailPeriodicSequence sum;
  for (std::size_t k = 0; k < c.size(); ++k) sum = sum + c[k] * other[k].value;
  EXPECT_EQ(sum, tau_d(1, 3, 2));
  EXPECT_TRUE(std::ranges::all_of(c, [](const Rational& x) { return x >= 0; }));
  // the two-ray witness in the (e_{n-2}, tail) plane
  EXPECT_EQ(frac(1, 2) * tau_d(1, 3, 5) + frac(1, 2) * tau_d(2, 3, 5), tau_d(1, 3, 2));

  EXPECT_THROW(containment_report({3, 5}, FixedConeParams(3, 2)), DomainError);
  EXPECT_THROW(containment_report({3, 2}, FixedConeParams(4, 3)), DomainError);
}

TEST(Containment, MonotoneInMultiplicity) {
  for (int n = 2; n <= 6; ++n) {
    for (int d = 2; d <= 6; ++d) {
      for (int d2 = d; d2 <= 7; ++d2) {
        const auto r = containment_report({n, d}, FixedConeParams(n, d2));
        EXPECT_TRUE(r.contained_in_total);
        EXPECT_TRUE(*r.contained_in_other) << n << ' ' << d << ' ' << d2;
      }
    }
  }
}

TEST(FixedCone, EmbeddingDimensionTwoWitnesses) {
  for (int d = 2; d <= 10; ++d) {
    const FixedConeParams p(2, d);
    const TailPeriodicSequence a({1}, Rational(d), Rational(d));
    const TailPeriodicSequence b({Rational(d - 1)}, Rational(d), Rational(d));
    EXPECT_TRUE(member(a, p).member);
    EXPECT_TRUE(member(b, p).member);
    EXPECT_EQ(xi(0, 2, d)(a), 0);
  }
}

}  // namespace
}  // namespace bettishape::fixed
