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

#include <json.hpp>

#include "bettishape/error.hpp"
#include "bettishape/hypersurface_common.hpp"
#include "bettishape/hypersurface_total.hpp"
#include "bettishape/rational.hpp"
#include "bettishape/rays.hpp"
#include "bettishape/regular_cone.hpp"
#include "bettishape/sequence.hpp"

// JSON exchange format. Rationals are always strings ("p/q" or "p").
namespace bettishape::io {

using Json = nlohmann::json;

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline Json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational values must be JSON strings");
  return parse_rational(j.get<std::string>());
}

inline Json rationals_to_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

inline std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

inline Json to_json(const BettiVector& v) {
  return {{"kind", "finite"},
          {"n", v.n()},
          {"entries", rationals_to_json({v.entries().begin(), v.entries().end()})}};
}

inline Json to_json(const TailPeriodicSequence& s) {
  return {{"kind", "tail"},
          {"stab", s.stab()},
          {"head", rationals_to_json(s.head())},
          {"tail_even", to_json(s.tail_even())},
          {"tail_odd", to_json(s.tail_odd())}};
}

/// A parsed sequence document: the W-view always, the V-view when the
/// document was finite.
struct SequenceInput {
  std::optional<BettiVector> finite;
  TailPeriodicSequence sequence;

  /// The finite vector of length n+1 this input denotes.
  BettiVector as_finite(int n) const {
    if (finite) {
      if (finite->n() != n) {
        throw DomainError("input has n = " + std::to_string(finite->n()) +
                          " but n = " + std::to_string(n) + " was requested");
      }
      return *finite;
    }
    return to_finite(sequence, n);
  }
};

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline int int_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("field \"") + key + "\" must be an integer");
  }
  const auto x = v.get<long long>();
  if (x < 0 || x > 1'000'000) {
    throw ParseError(std::string("field \"") + key + "\" out of range");
  }
  return static_cast<int>(x);
}

}  // namespace detail

inline SequenceInput sequence_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("sequence document must be a JSON object");
  const auto& kind = detail::field(j, "kind");
  if (kind == "finite") {
    const int n = detail::int_field(j, "n");
    auto entries = rationals_from_json(detail::field(j, "entries"));
    if (static_cast<int>(entries.size()) != n + 1) {
      throw ParseError("finite sequence needs n+1 entries");
    }
    BettiVector v(std::move(entries));
    return {v, embed(v)};
  }
  if (kind == "tail") {
    const int stab = detail::int_field(j, "stab");
    auto head = rationals_from_json(detail::field(j, "head"));
    if (static_cast<int>(head.size()) != stab) {
      throw ParseError("tail sequence needs exactly stab head entries");
    }
    return {std::nullopt,
            TailPeriodicSequence(std::move(head),
                                 rational_from_json(detail::field(j, "tail_even")),
                                 rational_from_json(detail::field(j, "tail_odd")))};
  }
  throw ParseError("sequence kind must be \"finite\" or \"tail\"");
}

inline SequenceInput sequence_from_text(const std::string& text) {
  return sequence_from_json(parse_text(text));
}

inline BettiVector finite_from_json(const Json& j) {
  auto in = sequence_from_json(j);
  if (!in.finite) throw ParseError("expected a finite sequence");
  return *in.finite;
}

inline Json to_json(const regular::RegularDecomposition& d) {
  Json coeffs = Json::array();
  for (int i = -1; i <= d.n - 1; ++i) {
    coeffs.push_back({{"ray", rho_name(i)}, {"coefficient", to_json(d.coeff(i))}});
  }
  return {{"cone", "regular"}, {"n", d.n}, {"certificate", coeffs}};
}

inline regular::RegularDecomposition regular_decomposition_from_json(const Json& j) {
  regular::RegularDecomposition d{detail::int_field(j, "n"), {}};
  const auto& cert = detail::field(j, "certificate");
  if (!cert.is_array() || static_cast<int>(cert.size()) != d.n + 1) {
    throw ParseError("regular certificate needs n+1 entries");
  }
  for (int i = -1; i <= d.n - 1; ++i) {
    const auto& item = cert[static_cast<std::size_t>(i + 1)];
    if (detail::field(item, "ray") != rho_name(i)) throw ParseError("unexpected ray name");
    d.a.push_back(rational_from_json(detail::field(item, "coefficient")));
  }
  return d;
}

inline Json to_json(const regular::ShapeClass& c) {
  return {{"member_of_closure", c.member_of_closure},
          {"realizable", c.realizable},
          {"depth", c.depth ? Json(*c.depth) : Json(nullptr)},
          {"cm_choice_exists", c.cm_choice_exists},
          {"decomposition", to_json(c.decomposition)}};
}

inline regular::ShapeClass shape_class_from_json(const Json& j) {
  regular::ShapeClass c;
  c.member_of_closure = detail::field(j, "member_of_closure").get<bool>();
  c.realizable = detail::field(j, "realizable").get<bool>();
  if (const auto& d = detail::field(j, "depth"); !d.is_null()) c.depth = d.get<int>();
  c.cm_choice_exists = detail::field(j, "cm_choice_exists").get<bool>();
  c.decomposition = regular_decomposition_from_json(detail::field(j, "decomposition"));
  return c;
}

/// Certificate over a named ray list; only the rays of the simplex used are
/// listed, in ray-list order.
inline Json to_json(const hyper::HyperDecomposition& d, const std::vector<NamedRay>& rays,
                    const std::string& cone, int n) {
  Json cert = Json::array();
  Json simplex = Json::array();
  for (int k : d.simplex_used) {
    const auto r = static_cast<std::size_t>(k);
    simplex.push_back(rays[r].name);
    cert.push_back({{"ray", rays[r].name}, {"coefficient", to_json(d.coefficients[r])}});
  }
  return {{"cone", cone}, {"n", n}, {"certificate", cert}, {"simplex", simplex}};
}

/// Rebuilds the coefficient vector over `rays` from a certificate document.
inline hyper::HyperDecomposition hyper_decomposition_from_json(
    const Json& j, const std::vector<NamedRay>& rays) {
  hyper::HyperDecomposition d{std::vector<Rational>(rays.size()), {}};
  auto index_of = [&](const Json& name) {
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (name == rays[k].name) return static_cast<int>(k);
    }
    throw ParseError("unknown ray name in certificate");
  };
  for (const auto& item : detail::field(j, "certificate")) {
    const int k = index_of(detail::field(item, "ray"));
    d.coefficients[static_cast<std::size_t>(k)] =
        rational_from_json(detail::field(item, "coefficient"));
  }
  for (const auto& name : detail::field(j, "simplex")) d.simplex_used.push_back(index_of(name));
  return d;
}

inline Json to_json(const hyper::MembershipReport& r) {
  return {{"member", r.member}, {"violated", r.violated}};
}

inline Json to_json(const total::Split& s) {
  return {{"v1", to_json(s.v1)}, {"v2", to_json(s.v2)}};
}

inline total::Split split_from_json(const Json& j) {
  return {finite_from_json(detail::field(j, "v1")), finite_from_json(detail::field(j, "v2"))};
}

/// Decimal rendering rounded half away from zero to `digits` places.
inline std::string decimal_string(const Rational& r, int digits = 10) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Integer num = abs(r.get_num()) * scale * 2 + r.get_den();
  Integer q = num / (r.get_den() * 2);
  std::string s = q.get_str();
  if (static_cast<int>(s.size()) <= digits) {
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  }
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (r < 0 && q != 0) s.insert(0, "-");
  return s;
}

}  // namespace bettishape::io
