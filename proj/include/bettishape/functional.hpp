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

#include <map>
#include <span>
#include <string>
#include <utility>

#include "bettishape/error.hpp"
#include "bettishape/rational.hpp"
#include "bettishape/sequence.hpp"

namespace bettishape {

/// A finitely supported linear functional sum_i c_i e*_i on W.
class LinearFunctional {
 public:
  LinearFunctional() = default;

  explicit LinearFunctional(std::map<int, Rational> coeffs) {
    for (auto& [i, c] : coeffs) {
      if (i < 0) throw DomainError("functional index must be >= 0");
      if (c != 0) coeffs_.emplace(i, std::move(c));
    }
  }

  /// The coordinate functional e*_i.
  static LinearFunctional coordinate(int i) {
    return LinearFunctional({{i, Rational(1)}});
  }

  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int i) const {
    const auto it = coeffs_.find(i);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// One past the largest index in the support (0 for the zero functional).
  int support_end() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first + 1;
  }

  Rational operator()(const TailPeriodicSequence& w) const {
    Rational sum;
    for (const auto& [i, c] : coeffs_) sum += c * w.entry(i);
    return sum;
  }

  /// Coordinates beyond the end of `v` count as zero.
  Rational operator()(std::span<const Rational> v) const {
    Rational sum;
    for (const auto& [i, c] : coeffs_) {
      if (static_cast<std::size_t>(i) < v.size()) {
        sum += c * v[static_cast<std::size_t>(i)];
      }
    }
    return sum;
  }

  Rational operator()(const BettiVector& v) const { return (*this)(v.entries()); }

  friend LinearFunctional operator+(const LinearFunctional& a,
                                    const LinearFunctional& b) {
    auto sum = a.coeffs_;
    for (const auto& [i, c] : b.coeffs_) sum[i] += c;
    return LinearFunctional(std::move(sum));
  }

  friend LinearFunctional operator*(const Rational& s, const LinearFunctional& f) {
    std::map<int, Rational> out;
    for (const auto& [i, c] : f.coeffs_) out.emplace(i, s * c);
    return LinearFunctional(std::move(out));
  }

  friend LinearFunctional operator-(const LinearFunctional& a,
                                    const LinearFunctional& b) {
    return a + Rational(-1) * b;
  }

  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

 private:
  std::map<int, Rational> coeffs_;
};

/// Partial Euler characteristic chi_[i,j] = sum_{l=i}^{j} (-1)^{l-i} e*_l.
/// The empty range j = i-1 gives the zero functional.
inline LinearFunctional chi(int i, int j) {
  if (i < 0 || i > j + 1) {
    throw DomainError("chi[" + std::to_string(i) + "," + std::to_string(j) +
                      "]: invalid range");
  }
  std::map<int, Rational> c;
  for (int l = i; l <= j; ++l) c.emplace(l, (l - i) % 2 == 0 ? 1 : -1);
  return LinearFunctional(std::move(c));
}

/// xi^d_[i,j]: d*chi_[i,j-1] - e*_j when j-i is odd, and
/// d*chi_[i,j-1] + (d-1)*e*_j when j-i is even.
inline LinearFunctional xi(int i, int j, int d) {
  if (d < 2) throw DomainError("multiplicity must be >= 2");
  if (i < 0 || i > j) {
    throw DomainError("xi[" + std::to_string(i) + "," + std::to_string(j) +
                      "]: invalid range");
  }
  const Rational last = (j - i) % 2 != 0 ? Rational(-1) : Rational(d - 1);
  return Rational(d) * chi(i, j - 1) + last * LinearFunctional::coordinate(j);
}

inline std::string chi_name(int i, int j) {
  return "chi[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

inline std::string xi_name(int i, int j, int d) {
  return "xi^" + std::to_string(d) + "[" + std::to_string(i) + "," +
         std::to_string(j) + "]";
}

enum class Relation { NonNegative, Zero };

/// A named half-space (F >= 0) or hyperplane (F = 0) constraint.
struct Constraint {
  std::string name;
  LinearFunctional functional;
  Relation relation = Relation::NonNegative;

  template <class X>
  bool holds(const X& x) const {
    const Rational value = functional(x);
    return relation == Relation::Zero ? value == 0 : value >= 0;
  }
};

}  // namespace bettishape
