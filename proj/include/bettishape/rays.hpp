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
#include "bettishape/rational.hpp"
#include "bettishape/sequence.hpp"

namespace bettishape {

enum class RayKind { Rho, TauInf, TauD };

/// rho_{-1} = e_0 and rho_i = e_i + e_{i+1} as a vector of V_n.
inline BettiVector rho(int i, int n) {
  if (i < -1 || i > n - 1) {
    throw DomainError("rho[" + std::to_string(i) + "] is not defined for n=" +
                      std::to_string(n));
  }
  std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
  if (i == -1) {
    e[0] = 1;
  } else {
    e[static_cast<std::size_t>(i)] = 1;
    e[static_cast<std::size_t>(i) + 1] = 1;
  }
  return BettiVector(std::move(e));
}

/// tau^inf_i = sum_{j >= i} e_j, for any i >= 0.
inline TailPeriodicSequence tau_inf(int i) {
  if (i < 0) throw DomainError("tau_inf index must be >= 0");
  return {std::vector<Rational>(static_cast<std::size_t>(i)), 1, 1};
}

/// tau^d_{n-2} = (d-1)/d e_{n-2} + sum_{j >= n-1} e_j and
/// tau^d_{n-1} = 1/d e_{n-2} + sum_{j >= n-1} e_j.
inline TailPeriodicSequence tau_d(int i, int n, int d) {
  if (n < 2) throw DomainError("tau rays need n >= 2");
  if (d < 2) throw DomainError("multiplicity must be >= 2");
  if (i != n - 2 && i != n - 1) {
    throw DomainError("tau^d index must be n-2 or n-1");
  }
  std::vector<Rational> head(static_cast<std::size_t>(n) - 1);
  head.back() = i == n - 2 ? frac(d - 1, d) : frac(1, d);
  return {std::move(head), 1, 1};
}

/// The named rays, with the index ranges they carry in the cone lists:
/// rho: -1 <= i <= n-1; tau_inf and tau_d: i in {n-2, n-1}, n >= 2.
inline TailPeriodicSequence ray(RayKind kind, int i, int n,
                                std::optional<int> d = std::nullopt) {
  switch (kind) {
    case RayKind::Rho:
      return embed(rho(i, n));
    case RayKind::TauInf:
      if (n < 2 || (i != n - 2 && i != n - 1)) {
        throw DomainError("tau_inf ray index must be n-2 or n-1 with n >= 2");
      }
      return tau_inf(i);
    case RayKind::TauD:
      if (!d) throw DomainError("tau_d ray needs a multiplicity");
      return tau_d(i, n, *d);
  }
  throw DomainError("unknown ray kind");
}

inline std::string rho_name(int i) { return "rho[" + std::to_string(i) + "]"; }
inline std::string tau_inf_name(int i) {
  return "tau_inf[" + std::to_string(i) + "]";
}
inline std::string tau_d_name(int i, int d) {
  return "tau^" + std::to_string(d) + "[" + std::to_string(i) + "]";
}

struct NamedRay {
  std::string name;
  TailPeriodicSequence value;
};

}  // namespace bettishape
