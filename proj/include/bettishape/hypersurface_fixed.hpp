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
#include <utility>
#include <vector>

#include "bettishape/error.hpp"
#include "bettishape/functional.hpp"
#include "bettishape/hypersurface_common.hpp"
#include "bettishape/hypersurface_total.hpp"
#include "bettishape/rays.hpp"
#include "bettishape/sequence.hpp"

/// The conjectured cone of Betti sequences over a hypersurface ring of
/// embedding dimension n and multiplicity d. Only the containment of the
/// actual cone in this one is known in general, so membership here never
/// certifies that a shape is realizable.
namespace bettishape::fixed {

using hyper::HyperDecomposition;
using hyper::MembershipReport;
using hyper::TriangulationLabel;

inline constexpr const char* kConjecturalNote =
    "member of conjectured cone; does not certify realizability";

struct FixedConeParams {
  int n = 2;
  int d = 2;

  FixedConeParams(int n_, int d_) : n(n_), d(d_) {
    if (n < 2) throw DomainError("embedding dimension must be >= 2");
    if (d < 2) throw DomainError("multiplicity must be >= 2");
  }

  /// For d = 2 the two tau rays coincide and the cone is simplicial.
  bool simplicial() const { return d == 2; }
};

/// [rho_{-1}, ..., rho_{n-2}, tau^d_{n-2}, tau^d_{n-1}], with the duplicate
/// tau dropped when d = 2.
inline std::vector<NamedRay> rays(const FixedConeParams& p) {
  std::vector<NamedRay> out;
  for (int i = -1; i <= p.n - 2; ++i) {
    out.push_back({rho_name(i), embed(rho(i, p.n))});
  }
  out.push_back({tau_d_name(p.n - 2, p.d), tau_d(p.n - 2, p.n, p.d)});
  if (!p.simplicial()) {
    out.push_back({tau_d_name(p.n - 1, p.d), tau_d(p.n - 1, p.n, p.d)});
  }
  return out;
}

/// xi^d_[i,n] >= 0 for 0 <= i <= n, then the total-cone inequalities.
inline std::vector<Constraint> inequalities(const FixedConeParams& p) {
  std::vector<Constraint> out;
  for (int i = 0; i <= p.n; ++i) {
    out.push_back({xi_name(i, p.n, p.d), xi(i, p.n, p.d), Relation::NonNegative});
  }
  for (auto& c : hyper::chi_constraints(p.n)) out.push_back(std::move(c));
  return out;
}

inline MembershipReport member(const TailPeriodicSequence& w,
                               const FixedConeParams& p) {
  return hyper::check(w, p.n, inequalities(p));
}

/// For d > 2: c(tau^d_{n-1}) = 1, c(tau^d_{n-2}) = -1, c(rho_{n-2}) = 0 and
/// c(rho_i) = (d-2)/d (-1)^{n-3-i}.
inline std::vector<Rational> linear_relation(const FixedConeParams& p) {
  if (p.simplicial()) throw DomainError("for d = 2 the rays are independent");
  const auto basis = rays(p);
  const Rational scale = frac(p.d - 2, p.d);
  std::vector<Rational> c(basis.size());
  for (int i = -1; i <= p.n - 3; ++i) {
    c[static_cast<std::size_t>(i + 1)] = (p.n - 3 - i) % 2 == 0 ? scale : Rational(-scale);
  }
  c[static_cast<std::size_t>(p.n)] = -1;
  c[static_cast<std::size_t>(p.n) + 1] = 1;
  TailPeriodicSequence sum;
  for (std::size_t k = 0; k < c.size(); ++k) sum = sum + c[k] * basis[k].value;
  if (!sum.is_zero()) throw InternalError("ray relation does not vanish");
  return c;
}

inline HyperDecomposition decompose(
    const TailPeriodicSequence& w, const FixedConeParams& p,
    TriangulationLabel which = TriangulationLabel::OmitOdd) {
  const auto report = member(w, p);
  if (!report.member) {
    throw NotInCone(report.violated.front(),
                    "sequence violates " + report.violated.front() +
                        " of the fixed-multiplicity cone");
  }
  const auto basis = rays(p);
  if (p.simplicial()) {
    std::vector<int> all;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) all.push_back(k);
    return hyper::locate(w, p.n, basis, {all});
  }
  // the sign pattern of the relation matches the total cone for d > 2
  return hyper::locate(w, p.n, basis,
                       hyper::circuit_triangulation(p.n, which).simplices());
}

struct RayCertificate {
  std::string ray;
  bool in_total = false;
  std::optional<HyperDecomposition> total_certificate;
  bool in_other = false;                                // only with p2
  std::optional<HyperDecomposition> other_certificate;  // over rays(p2)
};

struct ContainmentReport {
  bool contained_in_total = true;
  std::optional<bool> contained_in_other;
  std::vector<RayCertificate> rays;
};

/// Checks cone(p) inside the total cone and, when given, inside cone(p2) for
/// p2.d >= p.d, ray by ray.
inline ContainmentReport containment_report(
    const FixedConeParams& p, const std::optional<FixedConeParams>& p2 = std::nullopt) {
  if (p2 && (p2->n != p.n || p2->d < p.d)) {
    throw DomainError("containment needs the same n and a multiplicity d' >= d");
  }
  ContainmentReport out;
  if (p2) out.contained_in_other = true;
  for (const auto& r : rays(p)) {
    RayCertificate cert;
    cert.ray = r.name;
    cert.in_total = total::facets_check(r.value, p.n).member;
    if (cert.in_total) cert.total_certificate = total::decompose(r.value, p.n);
    out.contained_in_total = out.contained_in_total && cert.in_total;
    if (p2) {
      cert.in_other = member(r.value, *p2).member;
      if (cert.in_other) cert.other_certificate = decompose(r.value, *p2);
      out.contained_in_other = *out.contained_in_other && cert.in_other;
    }
    out.rays.push_back(std::move(cert));
  }
  return out;
}

}  // namespace bettishape::fixed
