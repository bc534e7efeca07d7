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

namespace bettishape::oracle {
namespace {

using VecList = std::vector<RationalVector>;

VecList identity(int dim) {
  VecList out;
  for (int i = 0; i < dim; ++i) {
    RationalVector e(static_cast<std::size_t>(dim));
    e[static_cast<std::size_t>(i)] = 1;
    out.push_back(e);
  }
  return out;
}

VecList regular_rays(int n) {
  VecList out;
  for (const auto& r : regular::rays(n)) out.push_back(verify::project(r));
  return out;
}

bool has_substring(const std::vector<std::string>& xs, const std::string& needle) {
  return std::ranges::any_of(xs, [&](const std::string& x) { return x.find(needle) != std::string::npos; });
}

TEST(IntegerKernels, RankAndDeterminantMatchGauss) {
  std::mt19937 gen(61);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + trial % 7;
    const int cols = 1 + (trial / 7) % 7;
    std::vector<IntVector> m;
    oracles::RMat q;
    for (int i = 0; i < rows; ++i) {
      IntVector row;
      oracles::RVec qrow;
      for (int j = 0; j < cols; ++j) {
        // sparse-ish so rank deficiency shows up
        const int x = gen() % 3 == 0 ? 0 : entry(gen);
        row.push_back(x);
        qrow.push_back(x);
      }
      m.push_back(row);
      q.push_back(qrow);
    }
    EXPECT_EQ(detail::rank(m), oracles::gauss_rank(q));
    if (rows == cols) {
      // det via product of pivots of a fraction elimination
      oracles::RMat a = q;
      Rational det = 1;
      for (int c = 0; c < rows; ++c) {
        int p = c;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) {
          det = 0;
          break;
        }
        if (p != c) {
          std::swap(a[p], a[c]);
          det = -det;
        }
        det *= a[c][c];
        for (int i = c + 1; i < rows; ++i) {
          const Rational f = a[i][c] / a[c][c];
          for (int j = c; j < rows; ++j) a[i][j] -= f * a[c][j];
        }
      }
      EXPECT_EQ(Rational(detail::det(m)), det);
    }
  }
}

TEST(IntegerKernels, CrossProductIsOrthogonal) {
  std::mt19937 gen(62);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + trial % 6;
    std::vector<IntVector> rows(dim - 1, IntVector(dim));
    for (auto& r : rows) {
      for (auto& x : r) x = entry(gen);
    }
    const auto h = detail::cross(rows, dim);
    for (const auto& r : rows) EXPECT_EQ(detail::dot(h, r), 0);
    EXPECT_EQ(detail::is_zero(h), detail::rank(rows) < static_cast<int>(dim) - 1);
  }
}

TEST(RaysToFacets, RegularConeGivesChiFunctionals) {
  const auto out = rays_to_facets({3, regular_rays(2), std::nullopt});
  EXPECT_TRUE(same_vectors(*out.facets, verify::project(regular::facets(2), 2)));
  EXPECT_EQ(out.facets->size(), 3u);
}

TEST(RaysToFacets, Orthant) {
  const auto out = rays_to_facets({3, identity(3), std::nullopt});
  EXPECT_EQ(*out.facets, (VecList{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST(RaysToFacets, TotalConeFacetsComeFromTheInequalityList) {
  const int n = 4;
  const auto ineq = verify::project(total::inequalities(n), n);
  const auto out = rays_to_facets({n + 1, verify::project(total::rays(n), n), std::nullopt});
  for (const auto& f : *out.facets) {
    EXPECT_TRUE(std::ranges::any_of(ineq, [&](const RationalVector& g) { return same_vectors({f}, {g}); }));
  }
  EXPECT_TRUE(cone_equal(out, {n + 1, std::nullopt, ineq}));
}

TEST(FacetsToRays, RegularAndOrthant) {
  const auto out = facets_to_rays({4, std::nullopt, verify::project(regular::facets(3), 3)});
  EXPECT_TRUE(same_vectors(*out.rays, regular_rays(3)));
  EXPECT_TRUE(same_vectors(*facets_to_rays({4, std::nullopt, identity(4)}).rays, identity(4)));
}

TEST(FacetsToRays, FixedConeInequalitiesGiveConjecturedRays) {
  const fixed::FixedConeParams p(3, 3);
  const auto out = facets_to_rays({4, std::nullopt, verify::project(fixed::inequalities(p), 3)});
  EXPECT_TRUE(same_vectors(*out.rays, verify::project(fixed::rays(p), 3)));
}

TEST(ConeEqual, Examples) {
  EXPECT_TRUE(cone_equal({3, identity(3), std::nullopt}, {3, std::nullopt, identity(3)}));
  EXPECT_TRUE(cone_equal({4, regular_rays(3), std::nullopt},
                         {4, std::nullopt, verify::project(regular::facets(3), 3)}));
  EXPECT_FALSE(cone_equal({4, regular_rays(3), std::nullopt},
                          {4, verify::project(total::rays(3), 3), std::nullopt}));
  EXPECT_THROW(cone_equal({3, identity(3), std::nullopt}, {4, identity(4), std::nullopt}), DomainError);
}

TEST(Oracle, Errors) {
  EXPECT_THROW(rays_to_facets({kMaxDim + 1, identity(kMaxDim + 1), std::nullopt}), ResourceError);
  EXPECT_THROW(rays_to_facets({3, VecList{{1, 0, 0}, {0, 1, 0}}, std::nullopt}), DomainError);
  EXPECT_THROW(rays_to_facets({3, VecList{{1, 0}}, std::nullopt}), DomainError);
  EXPECT_THROW(facets_to_rays({2, std::nullopt, VecList{{1, 0}, {-1, 0}}}), DomainError);
  EXPECT_THROW(rays_to_facets({3, std::nullopt, identity(3)}), DomainError);
  EXPECT_THROW(validate_triangulation({3, identity(3), std::nullopt}, {{0, 1, 3}}), DomainError);
}

TEST(Oracle, DualityRoundTripOnRandomCones) {
  std::mt19937 gen(63);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<int> lead(1, 6);
  int cones = 0;
  while (cones < 50) {
    const int dim = 2 + cones % 5;
    const int count = dim + static_cast<int>(gen() % static_cast<unsigned>(9 - dim));
    VecList rays;
    for (int k = 0; k < count; ++k) {
      RationalVector r{Rational(lead(gen))};  // first coordinate positive keeps the cone pointed
      for (int j = 1; j < dim; ++j) r.push_back(entry(gen));
      rays.push_back(r);
    }
    if (rank(rays, dim) < dim) continue;
    ++cones;
    const ConeDescription c{dim, rays, std::nullopt};
    const auto h = rays_to_facets(c);
    const auto v = facets_to_rays({dim, std::nullopt, *h.facets});
    EXPECT_TRUE(cone_equal(c, v));
    // extreme rays are input rays, and every input ray not listed lies inside
    for (const auto& r : *v.rays) {
      EXPECT_TRUE(std::ranges::any_of(rays, [&](const RationalVector& x) { return same_vectors({r}, {x}); }));
    }
    for (const auto& r : rays) EXPECT_TRUE(contains(v, r));
    // every facet is irredundant
    for (std::size_t k = 0; k < h.facets->size(); ++k) {
      const auto p = irredundancy_witness(h, k);
      ASSERT_TRUE(p.has_value());
      for (std::size_t l = 0; l < h.facets->size(); ++l) {
        Rational value;
        for (std::size_t j = 0; j < p->size(); ++j) value += (*h.facets)[l][j] * (*p)[j];
        if (l == k) {
          EXPECT_LT(value, 0);
        } else {
          EXPECT_GE(value, 0);
        }
      }
    }
    EXPECT_TRUE(std::ranges::is_sorted(*h.facets));
    EXPECT_TRUE(std::ranges::is_sorted(*v.rays));
  }
}

TEST(Oracle, RedundantFacetHasNoWitness) {
  auto fs = identity(3);
  fs.push_back({1, 1, 0});
  const ConeDescription c{3, std::nullopt, fs};
  const auto full = complete(c);
  std::size_t redundant = 0;
  for (std::size_t k = 0; k < full.facets->size(); ++k) {
    if ((*full.facets)[k] == RationalVector{1, 1, 0}) redundant = k;
  }
  EXPECT_FALSE(irredundancy_witness(full, redundant).has_value());
}

TEST(ValidateTriangulation, OrthantAndSquareCone) {
  EXPECT_TRUE(validate_triangulation({3, identity(3), std::nullopt}, {{0, 1, 2}}).valid);
  // cone over a square: two diagonal triangulations
  const VecList square{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}};
  const ConeDescription c{3, square, std::nullopt};
  EXPECT_TRUE(validate_triangulation(c, {{0, 1, 2}, {0, 2, 3}}).valid);
  EXPECT_TRUE(validate_triangulation(c, {{0, 1, 3}, {1, 2, 3}}).valid);
  const auto overlap = validate_triangulation(c, {{0, 1, 2}, {0, 2, 3}, {0, 1, 3}});
  EXPECT_FALSE(overlap.intersections_ok);
  const auto gap = validate_triangulation(c, {{0, 1, 2}});
  EXPECT_FALSE(gap.coverage_ok);
  EXPECT_TRUE(has_substring(gap.diagnostics, "coverage"));
  const auto flat = validate_triangulation(c, {{0, 1, 1}});
  EXPECT_FALSE(flat.simplices_ok);
}

TEST(ValidateTriangulation, TotalConeControls) {
  for (int n = 3; n <= 6; ++n) {
    const ConeDescription c{n + 1, verify::project(total::rays(n), n), std::nullopt};
    const auto [t1, t2] = total::triangulations(n);
    for (const auto& t : {t1, t2}) {
      const auto ok = validate_triangulation(c, t.simplices());
      EXPECT_TRUE(ok.valid) << n;
      EXPECT_TRUE(ok.diagnostics.empty());
      auto dropped = t.simplices();
      dropped.erase(dropped.begin());
      const auto gap = validate_triangulation(c, dropped);
      EXPECT_FALSE(gap.coverage_ok);
      EXPECT_TRUE(has_substring(gap.diagnostics, "coverage: sample point")) << n;
    }
    // both tau simplices plus every rho simplex
    std::vector<std::vector<int>> everything;
    for (int r = 0; r < n + 2; ++r) {
      if (r == n - 1) continue;
      std::vector<int> s;
      for (int k = 0; k < n + 2; ++k) {
        if (k != r) s.push_back(k);
      }
      everything.push_back(s);
    }
    const auto overlap = validate_triangulation(c, everything);
    EXPECT_FALSE(overlap.intersections_ok);
    EXPECT_TRUE(has_substring(overlap.diagnostics, "overlap")) << n;
  }
}

}  // namespace
}  // namespace bettishape::oracle
