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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bettishape/error.hpp"
#include "bettishape/rational.hpp"
#include "bettishape/rays.hpp"
#include "bettishape/sequence.hpp"

/// Herzog-Kuhl numerics of pure resolutions and the degree families whose
/// normalized Betti vectors converge to the rays rho_j.
namespace bettishape::pure {

/// Strictly increasing integer degrees (d_0 < d_1 < ... < d_s).
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<std::int64_t> degrees)
      : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw DomainError("degree sequence is empty");
    for (std::size_t i = 1; i < degrees_.size(); ++i) {
      if (degrees_[i - 1] >= degrees_[i]) {
        throw DomainError("degree sequence must be strictly increasing");
      }
    }
  }

  /// s, the index of the last degree.
  int length() const { return static_cast<int>(degrees_.size()) - 1; }
  std::int64_t operator[](int i) const {
    return degrees_.at(static_cast<std::size_t>(i));
  }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<std::int64_t> degrees_;
};

inline Integer to_integer(std::int64_t x) {
  return Integer(std::to_string(x), 10);
}

/// v(d)_i = 1 / prod_{j != i} |d_j - d_i| for i <= s, zero-padded to V_n.
inline BettiVector herzog_kuhl(const DegreeSequence& d, int n) {
  const int s = d.length();
  if (s > n) {
    throw DomainError("degree sequence of length s=" + std::to_string(s) +
                      " does not fit in dimension n=" + std::to_string(n));
  }
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= s; ++i) {
    Integer denom = 1;
    for (int j = 0; j <= s; ++j) {
      if (j == i) continue;
      denom *= to_integer(d[j] > d[i] ? d[j] - d[i] : d[i] - d[j]);
    }
    v[static_cast<std::size_t>(i)] = Rational(Integer(1), denom);
  }
  return BettiVector(std::move(v));
}

/// sum_{i=0}^{s} (-1)^i d_i^k v_i with 0^0 = 1. Vanishes for
/// 0 <= k <= s-1 exactly when v satisfies the Herzog-Kuhl equations.
inline Rational hk_residual(const BettiVector& v, const DegreeSequence& d, int k) {
  const int s = d.length();
  if (k < 0 || k > s - 1) {
    throw DomainError("hk_residual exponent must satisfy 0 <= k <= s-1");
  }
  if (v.n() < s) throw DomainError("vector shorter than the degree sequence");
  Rational sum;
  for (int i = 0; i <= s; ++i) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), to_integer(d[i]).get_mpz_t(),
               static_cast<unsigned long>(k));
    const Rational term = Rational(power) * v[i];
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

/// d^{j,t}_k = k t for k <= j and (k-1) t + 1 for k > j, k = 0..n.
inline DegreeSequence degree_family(int j, std::int64_t t, int n) {
  if (j < 0 || j > n - 1) {
    throw DomainError("degree_family needs 0 <= j <= n-1");
  }
  if (t < 2) throw DomainError("degree_family needs t >= 2");
  std::vector<std::int64_t> d;
  d.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t k = 0; k <= n; ++k) {
    d.push_back(k <= j ? k * t : (k - 1) * t + 1);
  }
  return DegreeSequence(std::move(d));
}

/// v / v_j.
inline BettiVector normalize_at(const BettiVector& v, int j) {
  if (j < 0 || j > v.n()) throw DomainError("normalization index out of range");
  if (v[j] == 0) {
    throw DomainError("cannot normalize at a zero coordinate (index " +
                      std::to_string(j) + ")");
  }
  return Rational(1 / v[j]) * v;
}

/// max_l |normalize_at(v(d^{j,t}), j)_l - (rho_j)_l|, exactly.
inline Rational limit_gap(int j, std::int64_t t, int n) {
  const BettiVector v = normalize_at(herzog_kuhl(degree_family(j, t, n), n), j);
  const BettiVector target = rho(j, n);
  Rational gap;
  for (int l = 0; l <= n; ++l) {
    const Rational diff = abs(v[l] - target[l]);
    if (diff > gap) gap = diff;
  }
  return gap;
}

}  // namespace bettishape::pure
