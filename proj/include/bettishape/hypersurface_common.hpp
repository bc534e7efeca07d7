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
#include <optional>
#include <string>
#include <vector>

#include "bettishape/error.hpp"
#include "bettishape/functional.hpp"
#include "bettishape/linalg.hpp"
#include "bettishape/rays.hpp"
#include "bettishape/sequence.hpp"

/// Pieces shared by the total and fixed-multiplicity hypersurface cones.
///
/// Both cones live in W but are (n+1)-dimensional: every member satisfies
/// w_i = w_n for all i >= n, so all linear algebra happens on the projection
/// to coordinates 0..n once that tail condition has been checked. Their ray
/// lists are rho_{-1}, ..., rho_{n-2} followed by two tau rays, n+2 vectors
/// with a single linear relation. Ray indices are fixed throughout: rho_i
/// has index i+1, the first tau ray has index n and the second n+1.
namespace bettishape::hyper {

enum class TriangulationLabel { OmitOdd, OmitEven };

inline std::string to_string(TriangulationLabel label) {
  return label == TriangulationLabel::OmitOdd ? "omit_odd" : "omit_even";
}

/// Simplices given by the ray omitted from the full list (Delta_r).
struct Triangulation {
  TriangulationLabel label = TriangulationLabel::OmitOdd;
  int ray_count = 0;
  std::vector<int> omitted;  // ascending

  /// Ray indices of each simplex, in the order of `omitted`.
  std::vector<std::vector<int>> simplices() const {
    std::vector<std::vector<int>> out;
    for (int r : omitted) {
      std::vector<int> s;
      for (int k = 0; k < ray_count; ++k) {
        if (k != r) s.push_back(k);
      }
      out.push_back(std::move(s));
    }
    return out;
  }
};

/// Nonnegative certificate w = sum coefficients[r] * ray_r.
struct HyperDecomposition {
  std::vector<Rational> coefficients;  // one per ray in the cone's ray list
  std::vector<int> simplex_used;       // rays allowed to be nonzero
};

struct MembershipReport {
  bool member = true;
  std::vector<std::string> violated;
};

/// chi_[i,j] >= 0 for i <= j <= n with j-i even, and chi_[n-1,n] >= 0.
inline std::vector<Constraint> chi_constraints(int n) {
  std::vector<Constraint> out;
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; j += 2) {
      out.push_back({chi_name(i, j), chi(i, j), Relation::NonNegative});
    }
  }
  out.push_back({chi_name(n - 1, n), chi(n - 1, n), Relation::NonNegative});
  return out;
}

/// First i >= n with w_i != w_{i+1}, i.e. a violated chi_[i,i+1] = 0.
inline std::optional<int> tail_violation(const TailPeriodicSequence& w, int n) {
  const int last = std::max(n, w.stab()) + 1;
  for (int i = n; i <= last; ++i) {
    if (w.entry(i) != w.entry(i + 1)) return i;
  }
  return std::nullopt;
}

inline MembershipReport check(const TailPeriodicSequence& w, int n,
                              const std::vector<Constraint>& constraints) {
  MembershipReport out;
  for (const auto& c : constraints) {
    if (!c.holds(w)) out.violated.push_back(c.name);
  }
  if (const auto i = tail_violation(w, n)) {
    out.violated.push_back(chi_name(*i, *i + 1) + "=0");
  }
  out.member = out.violated.empty();
  return out;
}

inline linalg::Vector project(const TailPeriodicSequence& w, int n) {
  linalg::Vector out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out.push_back(w.entry(i));
  return out;
}

/// Omitted rays of the two triangulations of an (n+2)-ray list whose
/// relation has sign (-1)^{n-1-k} on ray index k (zero on rho_{n-2}, which
/// lies in every simplex). omit_odd drops the odd-index rays other than
/// rho_{n-2}; omit_even drops the even-index ones.
inline Triangulation circuit_triangulation(int n, TriangulationLabel label) {
  if (n < 2) throw DomainError("hypersurface cones need n >= 2");
  Triangulation t{label, n + 2, {}};
  const int parity = label == TriangulationLabel::OmitOdd ? 1 : 0;
  const int rho_last = n - 1;  // index of rho_{n-2}
  for (int k = 0; k < n + 2; ++k) {
    if (k == rho_last) continue;
    // ray index k carries the label parity of the named index k-1 for rhos
    // and n-2, n-1 for the taus
    const int named = k < n ? k - 1 : k - 2;
    if (((named % 2) + 2) % 2 == parity) t.omitted.push_back(k);
  }
  return t;
}

/// Solves for the coordinates of `w` on the simplex spanned by `subset`.
inline std::optional<linalg::Vector> simplex_coordinates(
    const std::vector<NamedRay>& rays, const std::vector<int>& subset,
    const linalg::Vector& target, int n) {
  std::vector<linalg::Vector> cols;
  for (int k : subset) cols.push_back(project(rays[static_cast<std::size_t>(k)].value, n));
  return linalg::solve(linalg::Matrix::from_columns(cols), target);
}

/// Locates a simplex containing the projection of `w`, trying the simplices
/// in the order given, and returns the first nonnegative certificate. `w`
/// must already satisfy the cone's constraints.
inline HyperDecomposition locate(const TailPeriodicSequence& w, int n,
                                 const std::vector<NamedRay>& rays,
                                 const std::vector<std::vector<int>>& simplices) {
  const auto target = project(w, n);
  for (const auto& subset : simplices) {
    const auto x = simplex_coordinates(rays, subset, target, n);
    if (!x) continue;
    if (std::ranges::any_of(*x, [](const Rational& c) { return c < 0; })) continue;
    HyperDecomposition out{std::vector<Rational>(rays.size()), subset};
    TailPeriodicSequence sum;
    for (std::size_t k = 0; k < subset.size(); ++k) {
      const auto r = static_cast<std::size_t>(subset[k]);
      out.coefficients[r] = (*x)[k];
      sum = sum + (*x)[k] * rays[r].value;
    }
    if (sum != w) {
      throw InternalError("certificate does not reconstruct the input");
    }
    return out;
  }
  throw InternalError("no simplex admits a nonnegative certificate for a member");
}

}  // namespace bettishape::hyper
