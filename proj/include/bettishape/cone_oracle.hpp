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

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "bettishape/error.hpp"
#include "bettishape/rational.hpp"

/// Brute-force polyhedral engine over exact integers, used to cross-check
/// every ray/facet claim made by the cone modules. It shares no code with
/// them: vectors are primitive integer vectors, elimination is
/// fraction-free (Bareiss), and ray/facet conversion is the double
/// description method.
namespace bettishape::oracle {

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Largest ambient dimension the oracle accepts.
inline constexpr int kMaxDim = 16;

/// A pointed polyhedral cone in Q^dim, given by generators, by inward
/// facet normals (x with f.x >= 0 for every f), or both.
struct ConeDescription {
  int dim = 0;
  std::optional<std::vector<RationalVector>> rays;
  std::optional<std::vector<RationalVector>> facets;
};

namespace detail {

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVector& v) {
  return std::ranges::all_of(v, [](const Integer& x) { return x == 0; });
}

/// Divides out the gcd of the entries (sign preserved).
inline IntVector primitive(IntVector v) {
  Integer g;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

inline IntVector to_primitive(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Integer(x * l));
  return primitive(std::move(out));
}

inline RationalVector to_rational(const IntVector& v) {
  return RationalVector(v.begin(), v.end());
}

/// Fraction-free elimination; returns the rank and leaves `m` in echelon form.
inline int bareiss(std::vector<IntVector>& m, int* swaps = nullptr) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      if (swaps) ++*swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

inline int rank(std::vector<IntVector> rows) { return bareiss(rows); }

inline Integer det(std::vector<IntVector> m) {
  int swaps = 0;
  const int r = bareiss(m, &swaps);
  if (r < static_cast<int>(m.size())) return 0;
  Integer d = m.back().back();
  return swaps % 2 == 0 ? d : Integer(-d);
}

/// Generalized cross product of dim-1 vectors in Q^dim: the vector of signed
/// maximal minors, orthogonal to every input. Zero iff the inputs are
/// dependent.
inline IntVector cross(const std::vector<IntVector>& rows, std::size_t dim) {
  IntVector out(dim);
  for (std::size_t skip = 0; skip < dim; ++skip) {
    std::vector<IntVector> minor;
    minor.reserve(rows.size());
    for (const auto& row : rows) {
      IntVector m;
      m.reserve(dim - 1);
      for (std::size_t j = 0; j < dim; ++j) {
        if (j != skip) m.push_back(row[j]);
      }
      minor.push_back(std::move(m));
    }
    const Integer d = dim == 1 ? Integer(1) : det(std::move(minor));
    out[skip] = skip % 2 == 0 ? d : Integer(-d);
  }
  return primitive(std::move(out));
}

/// Sorted, deduplicated primitive vectors.
inline std::vector<IntVector> canonical_set(std::vector<IntVector> vs) {
  for (auto& v : vs) v = primitive(std::move(v));
  std::erase_if(vs, [](const IntVector& v) { return is_zero(v); });
  std::ranges::sort(vs);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline std::vector<IntVector> to_primitive_all(const std::vector<RationalVector>& vs,
                                               int dim) {
  std::vector<IntVector> out;
  for (const auto& v : vs) {
    if (static_cast<int>(v.size()) != dim) {
      throw DomainError("vector length does not match the ambient dimension");
    }
    out.push_back(to_primitive(v));
  }
  return out;
}

inline std::vector<RationalVector> to_rational_all(const std::vector<IntVector>& vs) {
  std::vector<RationalVector> out;
  for (const auto& v : vs) out.push_back(to_rational(v));
  return out;
}

inline void check_dim(int dim) {
  if (dim < 1) throw DomainError("ambient dimension must be >= 1");
  if (dim > kMaxDim) {
    throw ResourceError("ambient dimension " + std::to_string(dim) +
                        " exceeds the oracle limit");
  }
}

/// Extreme rays of the pointed cone {x : a.x >= 0 for every row a}, by the
/// double description method. The rows must have full rank `dim`.
inline std::vector<IntVector> double_description(const std::vector<IntVector>& rows,
                                                 std::size_t dim) {
  const std::size_t m = rows.size();
  // pick dim independent rows to start from a simplicial cone
  std::vector<std::size_t> basis;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < m && basis.size() < dim; ++i) {
    auto trial = chosen;
    trial.push_back(rows[i]);
    if (rank(trial) == static_cast<int>(trial.size())) {
      chosen = std::move(trial);
      basis.push_back(i);
    }
  }
  if (basis.size() < dim) {
    throw DomainError("constraint system does not define a pointed cone");
  }

  struct Ray {
    IntVector v;
    boost::dynamic_bitset<> zeros;
  };
  std::vector<Ray> current;
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<IntVector> others;
    for (std::size_t l = 0; l < dim; ++l) {
      if (l != k) others.push_back(chosen[l]);
    }
    IntVector v = cross(others, dim);
    if (dot(v, chosen[k]) < 0) {
      for (auto& x : v) x = -x;
    }
    Ray ray{std::move(v), boost::dynamic_bitset<>(m)};
    for (std::size_t l = 0; l < dim; ++l) {
      if (l != k) ray.zeros.set(basis[l]);
    }
    current.push_back(std::move(ray));
  }

  std::vector<bool> processed(m, false);
  for (auto i : basis) processed[i] = true;
  for (std::size_t row = 0; row < m; ++row) {
    if (processed[row]) continue;
    processed[row] = true;
    std::vector<Integer> value;
    value.reserve(current.size());
    for (const auto& r : current) value.push_back(dot(rows[row], r.v));

    std::vector<Ray> next;
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t k = 0; k < current.size(); ++k) {
      if (value[k] > 0) {
        pos.push_back(k);
        next.push_back(current[k]);
      } else if (value[k] == 0) {
        next.push_back(current[k]);
        next.back().zeros.set(row);
      } else {
        neg.push_back(k);
      }
    }
    for (auto p : pos) {
      for (auto q : neg) {
        const auto common = current[p].zeros & current[q].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < current.size() && adjacent; ++k) {
          if (k != p && k != q && common.is_subset_of(current[k].zeros)) {
            adjacent = false;
          }
        }
        if (!adjacent) continue;
        IntVector v(dim);
        for (std::size_t j = 0; j < dim; ++j) {
          v[j] = value[p] * current[q].v[j] - value[q] * current[p].v[j];
        }
        Ray ray{primitive(std::move(v)), common};
        ray.zeros.set(row);
        next.push_back(std::move(ray));
      }
    }
    current = std::move(next);
  }
  std::vector<IntVector> out;
  for (auto& r : current) out.push_back(std::move(r.v));
  return canonical_set(std::move(out));
}

inline bool satisfies(const std::vector<IntVector>& facets, const IntVector& x) {
  return std::ranges::all_of(facets, [&](const IntVector& f) { return dot(f, x) >= 0; });
}

}  // namespace detail

/// Rank of a list of rational vectors of common length `dim`.
inline int rank(const std::vector<RationalVector>& vs, int dim) {
  return detail::rank(detail::to_primitive_all(vs, dim));
}

/// Irredundant inward facet normals of cone(rays), primitive and sorted.
/// The rays must span Q^dim.
inline ConeDescription rays_to_facets(const ConeDescription& c) {
  detail::check_dim(c.dim);
  if (!c.rays) throw DomainError("rays_to_facets needs rays");
  auto rays = detail::canonical_set(detail::to_primitive_all(*c.rays, c.dim));
  if (detail::rank(rays) < c.dim) {
    throw DomainError("rays do not span the ambient space");
  }
  auto facets = detail::double_description(rays, static_cast<std::size_t>(c.dim));
  return {c.dim, detail::to_rational_all(rays), detail::to_rational_all(facets)};
}

/// Extreme rays of {x : f.x >= 0}, primitive and sorted. The facet normals
/// must have full rank (pointed cone).
inline ConeDescription facets_to_rays(const ConeDescription& c) {
  detail::check_dim(c.dim);
  if (!c.facets) throw DomainError("facets_to_rays needs facets");
  auto facets = detail::canonical_set(detail::to_primitive_all(*c.facets, c.dim));
  if (detail::rank(facets) < c.dim) {
    throw DomainError("facets do not define a pointed cone");
  }
  auto rays = detail::double_description(facets, static_cast<std::size_t>(c.dim));
  return {c.dim, detail::to_rational_all(rays), detail::to_rational_all(facets)};
}

/// Both presentations, computing whichever is missing.
inline ConeDescription complete(const ConeDescription& c) {
  if (c.rays && c.facets) return c;
  if (c.rays) return rays_to_facets(c);
  if (c.facets) return facets_to_rays(c);
  throw DomainError("cone description has neither rays nor facets");
}

inline bool contains(const ConeDescription& c, const RationalVector& x) {
  const auto full = complete(c);
  const auto fs = detail::to_primitive_all(*full.facets, c.dim);
  return detail::satisfies(fs, detail::to_primitive(x));
}

/// Mutual containment of two cones in the same ambient space.
inline bool cone_equal(const ConeDescription& a, const ConeDescription& b) {
  if (a.dim != b.dim) throw DomainError("cones live in different dimensions");
  const auto fa = complete(a);
  const auto fb = complete(b);
  const auto a_rays = detail::to_primitive_all(*fa.rays, a.dim);
  const auto b_rays = detail::to_primitive_all(*fb.rays, b.dim);
  const auto a_facets = detail::to_primitive_all(*fa.facets, a.dim);
  const auto b_facets = detail::to_primitive_all(*fb.facets, b.dim);
  return std::ranges::all_of(a_rays, [&](const IntVector& r) { return detail::satisfies(b_facets, r); }) &&
         std::ranges::all_of(b_rays, [&](const IntVector& r) { return detail::satisfies(a_facets, r); });
}

/// Same sets of primitive vectors (order and positive scaling ignored).
inline bool same_vectors(const std::vector<RationalVector>& a,
                         const std::vector<RationalVector>& b) {
  std::vector<IntVector> ia;
  std::vector<IntVector> ib;
  for (const auto& v : a) ia.push_back(detail::to_primitive(v));
  for (const auto& v : b) ib.push_back(detail::to_primitive(v));
  return detail::canonical_set(std::move(ia)) == detail::canonical_set(std::move(ib));
}

/// A point violating facet `k` of the complete description of `c` while
/// satisfying every other facet; nullopt when facet k is redundant.
inline std::optional<RationalVector> irredundancy_witness(const ConeDescription& c,
                                                          std::size_t k) {
  const auto full = complete(c);
  const auto fs = detail::to_primitive_all(*full.facets, c.dim);
  const auto rs = detail::to_primitive_all(*full.rays, c.dim);
  if (k >= fs.size()) throw DomainError("facet index out of range");
  // q: sum of the rays on facet k; g: sum of all rays (interior point)
  RationalVector q(static_cast<std::size_t>(c.dim));
  RationalVector g(static_cast<std::size_t>(c.dim));
  for (const auto& r : rs) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      g[j] += r[j];
      if (detail::dot(fs[k], r) == 0) q[j] += r[j];
    }
  }
  auto eval = [](const IntVector& f, const RationalVector& x) {
    Rational s;
    for (std::size_t j = 0; j < x.size(); ++j) s += Rational(f[j]) * x[j];
    return s;
  };
  Rational eps = 1;
  for (std::size_t l = 0; l < fs.size(); ++l) {
    if (l == k) continue;
    const Rational fq = eval(fs[l], q);
    const Rational fg = eval(fs[l], g);
    if (fq <= 0 && fg > 0) return std::nullopt;
    if (fg > 0) eps = std::min(eps, Rational(fq / fg / 2));
  }
  RationalVector p(q.size());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = q[j] - eps * g[j];
  if (eval(fs[k], p) >= 0) return std::nullopt;
  for (std::size_t l = 0; l < fs.size(); ++l) {
    if (l != k && eval(fs[l], p) < 0) return std::nullopt;
  }
  return p;
}

struct TriangulationReport {
  bool valid = true;
  bool simplices_ok = true;
  bool intersections_ok = true;
  bool coverage_ok = true;
  std::vector<std::string> diagnostics;

  void fail(bool TriangulationReport::*part, std::string message) {
    valid = false;
    this->*part = false;
    diagnostics.push_back(std::move(message));
  }
};

/// Checks that the simplicial cones spanned by the given subsets of
/// `c.rays` form a triangulation of cone(c.rays): every subset is a basis,
/// any two meet exactly in the cone over their common rays, every interior
/// wall is shared, and sample points (all basis barycenters plus random
/// positive combinations) are covered.
inline TriangulationReport validate_triangulation(
    const ConeDescription& c, const std::vector<std::vector<int>>& simplices,
    unsigned sample_seed = 20260101u) {
  using detail::dot;
  detail::check_dim(c.dim);
  if (!c.rays) throw DomainError("validate_triangulation needs rays");
  const auto dim = static_cast<std::size_t>(c.dim);
  const auto rays = detail::to_primitive_all(*c.rays, c.dim);
  const auto cone_facets = detail::to_primitive_all(*rays_to_facets(c).facets, c.dim);
  for (const auto& s : simplices) {
    for (int k : s) {
      if (k < 0 || static_cast<std::size_t>(k) >= rays.size()) {
        throw DomainError("simplex references ray " + std::to_string(k) +
                          " outside the ray list");
      }
    }
  }

  TriangulationReport report;
  // inward normals of each simplicial cone, normals[s][k] opposite ray s[k]
  std::vector<std::vector<IntVector>> normals(simplices.size());
  for (std::size_t si = 0; si < simplices.size(); ++si) {
    const auto& s = simplices[si];
    std::set<int> distinct(s.begin(), s.end());
    std::vector<IntVector> gens;
    for (int k : s) gens.push_back(rays[static_cast<std::size_t>(k)]);
    if (s.size() != dim || distinct.size() != dim || detail::rank(gens) < c.dim) {
      report.fail(&TriangulationReport::simplices_ok,
                  "simplex " + std::to_string(si) + " is not a full-dimensional simplicial cone");
      continue;
    }
    for (std::size_t k = 0; k < dim; ++k) {
      std::vector<IntVector> others;
      for (std::size_t l = 0; l < dim; ++l) {
        if (l != k) others.push_back(gens[l]);
      }
      IntVector h = detail::cross(others, dim);
      if (dot(h, gens[k]) < 0) {
        for (auto& x : h) x = -x;
      }
      normals[si].push_back(std::move(h));
    }
  }
  if (!report.simplices_ok) return report;

  // pairwise: the intersection must be the cone over the shared rays
  for (std::size_t a = 0; a < simplices.size(); ++a) {
    for (std::size_t b = a + 1; b < simplices.size(); ++b) {
      std::vector<IntVector> rows = normals[a];
      rows.insert(rows.end(), normals[b].begin(), normals[b].end());
      const auto meet = detail::double_description(rows, dim);
      std::vector<IntVector> shared;
      for (int k : simplices[a]) {
        if (std::ranges::find(simplices[b], k) != simplices[b].end()) {
          shared.push_back(detail::primitive(rays[static_cast<std::size_t>(k)]));
        }
      }
      for (const auto& r : meet) {
        if (std::ranges::find(shared, r) == shared.end()) {
          report.fail(&TriangulationReport::intersections_ok,
                      "overlap: simplices " + std::to_string(a) + " and " +
                          std::to_string(b) + " meet beyond their common face");
          break;
        }
      }
    }
  }

  // walls: each facet of a simplex lies on the cone boundary or is shared
  // with a simplex on the other side
  for (std::size_t si = 0; si < simplices.size(); ++si) {
    for (std::size_t k = 0; k < dim; ++k) {
      const IntVector& h = normals[si][k];
      if (std::ranges::find(cone_facets, h) != cone_facets.end()) continue;
      int partners = 0;
      for (std::size_t sj = 0; sj < simplices.size(); ++sj) {
        if (sj == si) continue;
        bool has_wall = true;
        int extra = -1;
        for (std::size_t l = 0; l < dim; ++l) {
          if (l == k) continue;
          if (std::ranges::find(simplices[sj], simplices[si][l]) == simplices[sj].end()) {
            has_wall = false;
          }
        }
        if (!has_wall) continue;
        for (int r : simplices[sj]) {
          if (dot(h, rays[static_cast<std::size_t>(r)]) != 0) extra = r;
        }
        if (extra >= 0 && dot(h, rays[static_cast<std::size_t>(extra)]) < 0) ++partners;
      }
      if (partners != 1) {
        report.fail(&TriangulationReport::coverage_ok,
                    "wall: facet opposite ray " + std::to_string(simplices[si][k]) +
                        " of simplex " + std::to_string(si) + " has " +
                        std::to_string(partners) + " neighbours across it");
      }
    }
  }

  // sampled coverage
  std::vector<IntVector> samples;
  {
    const std::size_t m = rays.size();
    std::vector<int> pick(dim);
    std::size_t budget = 5000;
    // enumerate dim-subsets of the ray list in lexicographic order
    std::vector<std::size_t> idx(dim);
    for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
    while (dim <= m && budget-- > 0) {
      std::vector<IntVector> gens;
      for (auto i : idx) gens.push_back(rays[i]);
      if (detail::rank(gens) == c.dim) {
        IntVector bary(dim);
        for (const auto& g : gens) {
          for (std::size_t j = 0; j < dim; ++j) bary[j] += g[j];
        }
        samples.push_back(std::move(bary));
      }
      std::size_t i = dim;
      while (i > 0 && idx[i - 1] == m - dim + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < dim; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::mt19937 gen(sample_seed);
    std::uniform_int_distribution<int> weight(1, 97);
    for (int t = 0; t < 64; ++t) {
      IntVector p(dim);
      for (const auto& r : rays) {
        const Integer w = weight(gen);
        for (std::size_t j = 0; j < dim; ++j) p[j] += w * r[j];
      }
      samples.push_back(std::move(p));
    }
  }
  for (const auto& p : samples) {
    const bool covered = std::ranges::any_of(normals, [&](const std::vector<IntVector>& hs) {
      return detail::satisfies(hs, p);
    });
    if (!covered) {
      std::string coords;
      for (const auto& x : p) coords += (coords.empty() ? "" : ",") + x.get_str();
      report.fail(&TriangulationReport::coverage_ok,
                  "coverage: sample point (" + coords + ") lies in no simplex");
      break;
    }
  }
  return report;
}

}  // namespace bettishape::oracle
