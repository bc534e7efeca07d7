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

#include <optional>
#include <string>
#include <vector>

#include "bettishape/error.hpp"
#include "bettishape/functional.hpp"
#include "bettishape/rays.hpp"
#include "bettishape/sequence.hpp"

/// The closed cone of Betti sequences over an n-dimensional regular local
/// ring: spanned by rho_{-1}, ..., rho_{n-1} and cut out by chi_[j,n] >= 0.
namespace bettishape::regular {

/// Coefficients a_{-1}, ..., a_{n-1} of v = sum a_i rho_i.
struct RegularDecomposition {
  int n = 0;
  std::vector<Rational> a;  // a[i + 1] is the coefficient of rho_i

  const Rational& coeff(int i) const { return a.at(static_cast<std::size_t>(i + 1)); }

  BettiVector reconstruct() const {
    BettiVector v = BettiVector::zero(n);
    for (int i = -1; i <= n - 1; ++i) v = v + coeff(i) * rho(i, n);
    return v;
  }

  friend bool operator==(const RegularDecomposition&,
                         const RegularDecomposition&) = default;
};

struct ShapeClass {
  bool member_of_closure = false;
  bool realizable = false;
  std::optional<int> depth;  // set iff realizable and v != 0
  bool cm_choice_exists = false;
  RegularDecomposition decomposition;
};

/// chi_[j,n] for j = 0..n.
inline std::vector<Constraint> facets(int n) {
  if (n < 0) throw DomainError("negative dimension");
  std::vector<Constraint> out;
  for (int j = 0; j <= n; ++j) {
    out.push_back({chi_name(j, n), chi(j, n), Relation::NonNegative});
  }
  return out;
}

/// rho_{-1}, rho_0, ..., rho_{n-1}.
inline std::vector<BettiVector> rays(int n) {
  if (n < 0) throw DomainError("negative dimension");
  std::vector<BettiVector> out;
  for (int i = -1; i <= n - 1; ++i) out.push_back(rho(i, n));
  return out;
}

/// Names of the violated facets, in index order.
inline std::vector<std::string> violations(const BettiVector& v) {
  std::vector<std::string> out;
  for (const auto& f : facets(v.n())) {
    if (!f.holds(v)) out.push_back(f.name);
  }
  return out;
}

inline bool member(const BettiVector& v) { return violations(v).empty(); }

/// Basis coordinates in the rho basis: a_i = chi_[i+1,n](v). Defined for
/// every v; nonnegative exactly on the cone.
inline RegularDecomposition coordinates(const BettiVector& v) {
  const int n = v.n();
  RegularDecomposition out{n, {}};
  for (int i = -1; i <= n - 1; ++i) out.a.push_back(chi(i + 1, n)(v));
  return out;
}

inline RegularDecomposition decompose(const BettiVector& v) {
  const auto bad = violations(v);
  if (!bad.empty()) {
    throw NotInCone(bad.front(), "vector violates " + bad.front() +
                                     " >= 0 of the regular cone");
  }
  return coordinates(v);
}

/// Shape classification: v is realizable iff v is in the closed cone and its
/// coefficients a_0, a_1, ... are strictly positive up to some index m and
/// zero afterwards; the depth is then n - 1 - m.
inline ShapeClass classify(const BettiVector& v) {
  const int n = v.n();
  ShapeClass out;
  out.decomposition = coordinates(v);
  out.member_of_closure = member(v);
  if (!out.member_of_closure) return out;
  if (v.is_zero()) {
    // zero module: realizable, no depth
    out.realizable = true;
    out.cm_choice_exists = true;
    return out;
  }
  int m = -1;
  while (m + 1 <= n - 1 && out.decomposition.coeff(m + 1) > 0) ++m;
  for (int i = m + 1; i <= n - 1; ++i) {
    if (out.decomposition.coeff(i) != 0) return out;  // interior zero
  }
  out.realizable = true;
  out.depth = n - 1 - m;
  out.cm_choice_exists = out.decomposition.coeff(-1) == 0;
  return out;
}

}  // namespace bettishape::regular
