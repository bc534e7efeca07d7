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

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "bettishape/error.hpp"

namespace bettishape {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading '-'). The result is canonical.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"}
                                      : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(Integer(std::string(num), 10), d);
  r.canonicalize();
  if (!text.empty() && text.front() == '-') r = -r;
  return r;
}

/// Canonical "p/q", or bare "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

/// p/q for machine integers, canonicalized; q != 0.
inline Rational frac(long p, long q) {
  if (q == 0) throw DomainError("zero denominator");
  Rational r(p);
  r /= q;
  return r;
}

}  // namespace bettishape
