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

#include <string>
#include <utility>
#include <vector>

#include "bettishape/error.hpp"
#include "bettishape/functional.hpp"
#include "bettishape/hypersurface_common.hpp"
#include "bettishape/rays.hpp"
#include "bettishape/sequence.hpp"

/// The total hypersurface cone: the closure of all hypersurface Betti
/// sequences over an n-dimensional regular local ring.
namespace bettishape::total {

using hyper::HyperDecomposition;
using hyper::MembershipReport;
using hyper::Triangulation;
using hyper::TriangulationLabel;

/// Even/odd prefix sums: (v_0, v_1, v_0+v_2, v_1+v_3, v_0+v_2+v_4, ...).
/// Entries are constant from index n+1 on, with tail_even the sum of the
/// even-index entries of v and tail_odd the sum of the odd-index ones.
inline TailPeriodicSequence phi(const BettiVector& v) {
  const int n = v.n();
  std::vector<Rational> head;
  head.reserve(static_cast<std::size_t>(n) + 1);
  Rational even;
  Rational odd;
  for (int l = 0; l <= n; ++l) {
    if (l % 2 == 0) {
      even += v[l];
      head.push_back(even);
    } else {
      odd += v[l];
      head.push_back(odd);
    }
  }
  return {std::move(head), even, odd};
}

/// [rho_{-1}, rho_0, ..., rho_{n-2}, tau_inf_{n-2}, tau_inf_{n-1}].
inline std::vector<NamedRay> rays(int n) {
  if (n < 2) throw DomainError("the total hypersurface cone needs n >= 2");
  std::vector<NamedRay> out;
  for (int i = -1; i <= n - 2; ++i) out.push_back({rho_name(i), embed(rho(i, n))});
  out.push_back({tau_inf_name(n - 2), tau_inf(n - 2)});
  out.push_back({tau_inf_name(n - 1), tau_inf(n - 1)});
  return out;
}

/// The inequality part of the facet description; the tail equalities
/// chi_[i,i+1] = 0 (i >= n) are checked separately by facets_check.
inline std::vector<Constraint> inequalities(int n) {
  if (n < 2) throw DomainError("the total hypersurface cone needs n >= 2");
  return hyper::chi_constraints(n);
}

inline MembershipReport facets_check(const TailPeriodicSequence& w, int n) {
  return hyper::check(w, n, inequalities(n));
}

/// Coefficients c over rays(n) with sum c_r ray_r = 0, scaled so the
/// tau_inf_{n-1} coefficient is 1: c(tau_inf_{n-2}) = -1, c(rho_{n-2}) = 0
/// and c(rho_i) = (-1)^{n-3-i} for -1 <= i <= n-3.
inline std::vector<Rational> linear_relation(int n) {
  const auto basis = rays(n);
  std::vector<Rational> c(basis.size());
  for (int i = -1; i <= n - 3; ++i) {
    c[static_cast<std::size_t>(i + 1)] = (n - 3 - i) % 2 == 0 ? 1 : -1;
  }
  c[static_cast<std::size_t>(n)] = -1;
  c[static_cast<std::size_t>(n) + 1] = 1;
  TailPeriodicSequence sum;
  for (std::size_t k = 0; k < c.size(); ++k) sum = sum + c[k] * basis[k].value;
  if (!sum.is_zero()) throw InternalError("ray relation does not vanish");
  return c;
}

/// The two triangulations, (omit_odd, omit_even). Each simplex drops one
/// ray with nonzero relation coefficient; within a triangulation all the
/// dropped rays carry the same sign.
inline std::pair<Triangulation, Triangulation> triangulations(int n) {
  if (n < 3) throw DomainError("triangulations are listed for n >= 3");
  return {hyper::circuit_triangulation(n, TriangulationLabel::OmitOdd),
          hyper::circuit_triangulation(n, TriangulationLabel::OmitEven)};
}

inline HyperDecomposition decompose(
    const TailPeriodicSequence& w, int n,
    TriangulationLabel which = TriangulationLabel::OmitOdd) {
  const auto report = facets_check(w, n);
  if (!report.member) {
    throw NotInCone(report.violated.front(),
                    "sequence violates " + report.violated.front() +
                        " of the total hypersurface cone");
  }
  return hyper::locate(w, n, rays(n),
                       hyper::circuit_triangulation(n, which).simplices());
}

/// w = phi(v1) + v2 with v1 a rank-zero member of the n-dimensional regular
/// cone and v2 a member of the (n-1)-dimensional one.
struct Split {
  BettiVector v1;
  BettiVector v2;
};

inline Split split(const TailPeriodicSequence& w, int n) {
  const auto dec = decompose(w, n);
  const auto& c = dec.coefficients;
  const auto tau_lo = c[static_cast<std::size_t>(n)];
  const auto tau_hi = c[static_cast<std::size_t>(n) + 1];
  BettiVector v1 = tau_lo * rho(n - 2, n) + tau_hi * rho(n - 1, n);
  BettiVector v2 = BettiVector::zero(n - 1);
  for (int i = -1; i <= n - 2; ++i) {
    v2 = v2 + c[static_cast<std::size_t>(i + 1)] * rho(i, n - 1);
  }
  if (phi(v1) + embed(v2) != w) throw InternalError("split does not reconstruct");
  return {std::move(v1), std::move(v2)};
}

}  // namespace bettishape::total
