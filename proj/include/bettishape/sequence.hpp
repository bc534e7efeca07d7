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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bettishape/error.hpp"
#include "bettishape/rational.hpp"

namespace bettishape {

/// A vector of V = Q^{n+1}, indexed 0..n.
class BettiVector {
 public:
  explicit BettiVector(std::vector<Rational> entries)
      : entries_(std::move(entries)) {
    if (entries_.empty()) {
      throw DomainError("BettiVector needs at least one entry (n >= 0)");
    }
  }

  static BettiVector zero(int n) {
    if (n < 0) throw DomainError("negative dimension");
    return BettiVector(std::vector<Rational>(static_cast<std::size_t>(n) + 1));
  }

  int n() const { return static_cast<int>(entries_.size()) - 1; }
  std::size_t size() const { return entries_.size(); }

  const Rational& operator[](int i) const {
    return entries_.at(static_cast<std::size_t>(i));
  }
  std::span<const Rational> entries() const { return entries_; }

  bool is_zero() const {
    return std::ranges::all_of(entries_, [](const Rational& x) { return x == 0; });
  }

  friend bool operator==(const BettiVector&, const BettiVector&) = default;

 private:
  std::vector<Rational> entries_;
};

/// An element of W = prod Q whose entries are eventually 2-periodic:
/// entry(i) = head[i] for i < stab, and for i >= stab it is tail_even when
/// i is even and tail_odd when i is odd. Always stored with minimal stab.
class TailPeriodicSequence {
 public:
  TailPeriodicSequence() = default;

  TailPeriodicSequence(std::vector<Rational> head, Rational tail_even,
                       Rational tail_odd)
      : head_(std::move(head)),
        tail_even_(std::move(tail_even)),
        tail_odd_(std::move(tail_odd)) {
    while (!head_.empty()) {
      const auto i = head_.size() - 1;
      if (head_.back() != (i % 2 == 0 ? tail_even_ : tail_odd_)) break;
      head_.pop_back();
    }
  }

  int stab() const { return static_cast<int>(head_.size()); }
  const std::vector<Rational>& head() const { return head_; }
  const Rational& tail_even() const { return tail_even_; }
  const Rational& tail_odd() const { return tail_odd_; }

  Rational entry(int i) const {
    if (i < 0) throw DomainError("negative sequence index");
    if (i < stab()) return head_[static_cast<std::size_t>(i)];
    return i % 2 == 0 ? tail_even_ : tail_odd_;
  }

  bool has_zero_tail() const { return tail_even_ == 0 && tail_odd_ == 0; }
  bool has_constant_tail() const { return tail_even_ == tail_odd_; }
  bool is_zero() const { return head_.empty() && has_zero_tail(); }

  /// Number of leading entries that determine the sequence: every index
  /// >= span() repeats an entry of parity-equal index span()-2 or span()-1.
  int span() const { return stab() + 2; }

  friend bool operator==(const TailPeriodicSequence&,
                         const TailPeriodicSequence&) = default;

 private:
  std::vector<Rational> head_;
  Rational tail_even_;
  Rational tail_odd_;
};

using Sequence = TailPeriodicSequence;

/// The finite vector viewed in W (zero tail).
inline TailPeriodicSequence embed(const BettiVector& v) {
  return {std::vector<Rational>(v.entries().begin(), v.entries().end()), 0, 0};
}

/// First `length` entries of `s`.
inline BettiVector truncate(const TailPeriodicSequence& s, int length) {
  if (length < 1) throw DomainError("truncate length must be >= 1");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) out.push_back(s.entry(i));
  return BettiVector(std::move(out));
}

/// Views `s` as a vector of V_n; throws unless s vanishes beyond index n.
inline BettiVector to_finite(const TailPeriodicSequence& s, int n) {
  if (n < 0) throw DomainError("negative dimension");
  if (!s.has_zero_tail() || s.stab() > n + 1) {
    throw DomainError("sequence has support beyond index " + std::to_string(n));
  }
  return truncate(s, n + 1);
}

inline TailPeriodicSequence operator+(const TailPeriodicSequence& a,
                                      const TailPeriodicSequence& b) {
  const int len = std::max(a.stab(), b.stab());
  std::vector<Rational> head;
  head.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) head.push_back(a.entry(i) + b.entry(i));
  return {std::move(head), a.tail_even() + b.tail_even(),
          a.tail_odd() + b.tail_odd()};
}

inline TailPeriodicSequence operator*(const Rational& c,
                                      const TailPeriodicSequence& s) {
  std::vector<Rational> head;
  head.reserve(s.head().size());
  for (const auto& x : s.head()) head.push_back(c * x);
  return {std::move(head), c * s.tail_even(), c * s.tail_odd()};
}

inline TailPeriodicSequence operator-(const TailPeriodicSequence& a,
                                      const TailPeriodicSequence& b) {
  return a + Rational(-1) * b;
}

/// Sum of vectors of possibly different lengths; the shorter is zero-padded.
inline BettiVector operator+(const BettiVector& a, const BettiVector& b) {
  const auto len = std::max(a.size(), b.size());
  std::vector<Rational> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (i < a.size()) out[i] += a.entries()[i];
    if (i < b.size()) out[i] += b.entries()[i];
  }
  return BettiVector(std::move(out));
}

inline BettiVector operator*(const Rational& c, const BettiVector& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v.entries()) out.push_back(c * x);
  return BettiVector(std::move(out));
}

inline BettiVector operator-(const BettiVector& a, const BettiVector& b) {
  return a + Rational(-1) * b;
}

/// True iff a = lambda * b for some lambda > 0. The zero sequence is
/// shape-equal only to itself.
inline bool shape_equal(const TailPeriodicSequence& a,
                        const TailPeriodicSequence& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const int len = std::max(a.span(), b.span());
  int pivot = 0;
  while (a.entry(pivot) == 0) ++pivot;  // a nonzero entry exists below len
  const Rational lambda = b.entry(pivot) / a.entry(pivot);
  if (lambda <= 0) return false;
  for (int i = 0; i < len; ++i) {
    if (lambda * a.entry(i) != b.entry(i)) return false;
  }
  return true;
}

inline bool shape_equal(const BettiVector& a, const BettiVector& b) {
  return shape_equal(embed(a), embed(b));
}

}  // namespace bettishape
