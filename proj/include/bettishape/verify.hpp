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

#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "bettishape/cone_oracle.hpp"
#include "bettishape/functional.hpp"
#include "bettishape/hypersurface_fixed.hpp"
#include "bettishape/hypersurface_total.hpp"
#include "bettishape/rays.hpp"
#include "bettishape/regular_cone.hpp"
#include "bettishape/sequence.hpp"

// Sweeps that compare each cone module's ray and facet lists against the
// polyhedral oracle.
namespace bettishape::verify {

struct CaseResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Report {
  std::vector<CaseResult> cases;

  bool passed() const {
    for (const auto& c : cases) {
      if (!c.passed) return false;
    }
    return true;
  }
};

struct Options {
  int n_max = 8;
  int mult_max = 6;
};

/// Coefficients 0..n of a functional supported there.
inline oracle::RationalVector project(const LinearFunctional& f, int n) {
  if (f.support_end() > n + 1) throw InternalError("functional reaches past index n");
  oracle::RationalVector out;
  for (int i = 0; i <= n; ++i) out.push_back(f.coeff(i));
  return out;
}

inline oracle::RationalVector project(const TailPeriodicSequence& w, int n) {
  oracle::RationalVector out;
  for (int i = 0; i <= n; ++i) out.push_back(w.entry(i));
  return out;
}

inline oracle::RationalVector project(const BettiVector& v) {
  return {v.entries().begin(), v.entries().end()};
}

inline std::vector<oracle::RationalVector> project(const std::vector<Constraint>& cs, int n) {
  std::vector<oracle::RationalVector> out;
  for (const auto& c : cs) out.push_back(project(c.functional, n));
  return out;
}

inline std::vector<oracle::RationalVector> project(const std::vector<NamedRay>& rays, int n) {
  std::vector<oracle::RationalVector> out;
  for (const auto& r : rays) out.push_back(project(r.value, n));
  return out;
}

namespace detail {

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    result_.passed = false;
    result_.detail += (result_.detail.empty() ? "" : "; ") + what;
  }

  template <typename F>
  CaseResult run(F&& body) && {
    try {
      body(*this);
    } catch (const std::exception& e) {
      expect(false, std::string("exception: ") + e.what());
    }
    return std::move(result_);
  }

 private:
  CaseResult result_;
};

inline bool relation_spans_nullspace(const std::vector<oracle::RationalVector>& rays,
                                     const std::vector<Rational>& c, int dim) {
  if (oracle::rank(rays, dim) != static_cast<int>(rays.size()) - 1) return false;
  oracle::RationalVector sum(static_cast<std::size_t>(dim));
  bool nonzero = false;
  for (std::size_t k = 0; k < rays.size(); ++k) {
    nonzero = nonzero || c[k] != 0;
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += c[k] * rays[k][j];
  }
  return nonzero && std::ranges::all_of(sum, [](const Rational& x) { return x == 0; });
}

}  // namespace detail

/// Ray and facet presentations of the regular cone agree, and each list is
/// exactly the irredundant one.
inline CaseResult regular_case(int n) {
  return detail::Checker("regular n=" + std::to_string(n)).run([n](detail::Checker& ck) {
    std::vector<oracle::RationalVector> rays;
    for (const auto& r : regular::rays(n)) rays.push_back(project(r));
    const auto facets = project(regular::facets(n), n);
    const oracle::ConeDescription by_rays{n + 1, rays, std::nullopt};
    const oracle::ConeDescription by_facets{n + 1, std::nullopt, facets};
    ck.expect(oracle::cone_equal(by_rays, by_facets), "presentations differ");
    ck.expect(oracle::same_vectors(*oracle::rays_to_facets(by_rays).facets, facets),
              "facet list is not the irredundant one");
    ck.expect(oracle::same_vectors(*oracle::facets_to_rays(by_facets).rays, rays),
              "ray list is not the extremal one");
  });
}

inline CaseResult total_case(int n) {
  return detail::Checker("total n=" + std::to_string(n)).run([n](detail::Checker& ck) {
    const auto named = total::rays(n);
    const auto rays = project(named, n);
    const auto ineq = project(total::inequalities(n), n);
    const oracle::ConeDescription by_rays{n + 1, rays, std::nullopt};
    const oracle::ConeDescription by_facets{n + 1, std::nullopt, ineq};
    ck.expect(oracle::cone_equal(by_rays, by_facets), "presentations differ");
    if (n >= 3) {
      ck.expect(oracle::same_vectors(*oracle::facets_to_rays(by_facets).rays, rays),
                "ray list is not the extremal one");
    }
    for (const auto& r : named) {
      ck.expect(total::facets_check(r.value, n).member, r.name + " fails the tail equalities");
    }
    ck.expect(detail::relation_spans_nullspace(rays, total::linear_relation(n), n + 1),
              "relation does not span the nullspace");
  });
}

inline CaseResult fixed_case(int n, int d, int mult_max) {
  return detail::Checker("fixed n=" + std::to_string(n) + " d=" + std::to_string(d))
      .run([n, d, mult_max](detail::Checker& ck) {
        const fixed::FixedConeParams p(n, d);
        const auto named = fixed::rays(p);
        const auto rays = project(named, n);
        const auto ineq = project(fixed::inequalities(p), n);
        ck.expect(oracle::cone_equal({n + 1, rays, std::nullopt}, {n + 1, std::nullopt, ineq}),
                  "presentations differ");
        for (const auto& r : named) {
          ck.expect(fixed::member(r.value, p).member, r.name + " fails the constraints");
        }
        if (!p.simplicial()) {
          ck.expect(detail::relation_spans_nullspace(rays, fixed::linear_relation(p), n + 1),
                    "relation does not span the nullspace");
        } else {
          ck.expect(oracle::rank(rays, n + 1) == n + 1, "rays are not independent");
        }
        const auto up = d < mult_max ? std::optional<fixed::FixedConeParams>(fixed::FixedConeParams(n, d + 1))
                                     : std::nullopt;
        const auto report = fixed::containment_report(p, up);
        ck.expect(report.contained_in_total, "not inside the total cone");
        if (up) ck.expect(*report.contained_in_other, "not inside the next multiplicity");
      });
}

inline CaseResult phi_case(int n) {
  return detail::Checker("phi n=" + std::to_string(n)).run([n](detail::Checker& ck) {
    for (int i = 0; i <= n - 1; ++i) {
      ck.expect(total::phi(rho(i, n)) == tau_inf(i), "phi(rho[" + std::to_string(i) + "])");
    }
  });
}

/// Both triangulations validate; dropping a simplex or taking every simplex
/// at once is rejected.
inline CaseResult triangulation_case(int n) {
  return detail::Checker("triangulations n=" + std::to_string(n)).run([n](detail::Checker& ck) {
    const oracle::ConeDescription cone{n + 1, project(total::rays(n), n), std::nullopt};
    const auto [odd, even] = total::triangulations(n);
    for (const auto& t : {odd, even}) {
      const auto report = oracle::validate_triangulation(cone, t.simplices());
      ck.expect(report.valid, hyper::to_string(t.label) + " invalid");
      auto dropped = t.simplices();
      dropped.pop_back();
      ck.expect(!oracle::validate_triangulation(cone, dropped).coverage_ok,
                hyper::to_string(t.label) + " minus a simplex still covers");
    }
    auto both = odd.simplices();
    for (const auto& s : even.simplices()) both.push_back(s);
    ck.expect(!oracle::validate_triangulation(cone, both).intersections_ok,
              "union of both triangulations shows no overlap");
  });
}

inline Report run(const Options& opt) {
  if (opt.n_max < 0 || opt.mult_max < 2) {
    throw DomainError("verify needs n-max >= 0 and mult-max >= 2");
  }
  Report report;
  for (int n = 0; n <= opt.n_max; ++n) report.cases.push_back(regular_case(n));
  for (int n = 2; n <= opt.n_max; ++n) report.cases.push_back(total_case(n));
  for (int n = 2; n <= opt.n_max; ++n) {
    for (int d = 2; d <= opt.mult_max; ++d) report.cases.push_back(fixed_case(n, d, opt.mult_max));
  }
  for (int n = 1; n <= opt.n_max; ++n) report.cases.push_back(phi_case(n));
  for (int n = 3; n <= opt.n_max; ++n) report.cases.push_back(triangulation_case(n));
  return report;
}

}  // namespace bettishape::verify
