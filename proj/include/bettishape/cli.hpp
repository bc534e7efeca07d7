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

#include <charconv>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bettishape/error.hpp"
#include "bettishape/hypersurface_fixed.hpp"
#include "bettishape/hypersurface_total.hpp"
#include "bettishape/json_io.hpp"
#include "bettishape/pure_betti.hpp"
#include "bettishape/regular_cone.hpp"
#include "bettishape/verify.hpp"

namespace bettishape::cli {

enum ExitCode : int { kOk = 0, kBadInput = 1, kPrecondition = 2, kInternal = 3 };

struct CommandConfig {
  int n = -1;
  std::optional<int> mult;
  std::string cone;
  std::optional<std::string> input_path;
  std::optional<std::string> inline_json;
  int triangulation = 1;
  std::string degrees;
  std::optional<int> normalize_at;
  int j = 0;
  std::int64_t t = 0;
  int len = 0;
  int n_max = 8;
  int mult_max = 6;
};

namespace detail {

inline std::vector<std::int64_t> parse_degrees(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const std::string_view item(text.data() + start, end - start);
    std::int64_t x = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("degree list must be comma-separated integers");
    }
    out.push_back(x);
    start = end + 1;
  }
  return out;
}

inline io::SequenceInput read_input(const CommandConfig& cfg) {
  if (cfg.input_path.has_value() == cfg.inline_json.has_value()) {
    throw ParseError("give exactly one of --input or --inline");
  }
  if (cfg.inline_json) return io::sequence_from_text(*cfg.inline_json);
  std::ifstream in(*cfg.input_path);
  if (!in) throw ParseError("cannot read " + *cfg.input_path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return io::sequence_from_text(text);
}

inline hyper::TriangulationLabel label(int which) {
  return which == 1 ? hyper::TriangulationLabel::OmitOdd : hyper::TriangulationLabel::OmitEven;
}

inline fixed::FixedConeParams fixed_params(const CommandConfig& cfg) {
  if (!cfg.mult) throw ParseError("--mult is required for the fixed cone");
  return {cfg.n, *cfg.mult};
}

inline void require_n(const CommandConfig& cfg) {
  if (cfg.n < 0) throw ParseError("--n is required");
}

inline io::Json member(const CommandConfig& cfg) {
  require_n(cfg);
  const auto in = read_input(cfg);
  io::Json out{{"cone", cfg.cone}, {"n", cfg.n}};
  if (cfg.cone == "regular") {
    const auto bad = regular::violations(in.as_finite(cfg.n));
    out["member"] = bad.empty();
    out["violated"] = bad;
  } else if (cfg.cone == "total") {
    const auto r = total::facets_check(in.sequence, cfg.n);
    out["member"] = r.member;
    out["violated"] = r.violated;
  } else {
    const auto p = fixed_params(cfg);
    const auto r = fixed::member(in.sequence, p);
    out["mult"] = p.d;
    out["member"] = r.member;
    out["violated"] = r.violated;
    out["note"] = fixed::kConjecturalNote;
  }
  return out;
}

inline io::Json decompose(const CommandConfig& cfg) {
  require_n(cfg);
  const auto in = read_input(cfg);
  if (cfg.cone == "regular") return io::to_json(regular::decompose(in.as_finite(cfg.n)));
  const auto which = label(cfg.triangulation);
  if (cfg.cone == "total") {
    auto out = io::to_json(total::decompose(in.sequence, cfg.n, which), total::rays(cfg.n),
                           "total", cfg.n);
    out["triangulation"] = hyper::to_string(which);
    return out;
  }
  const auto p = fixed_params(cfg);
  auto out = io::to_json(fixed::decompose(in.sequence, p, which), fixed::rays(p), "fixed", cfg.n);
  out["mult"] = p.d;
  out["triangulation"] = p.simplicial() ? "simplicial" : hyper::to_string(which);
  out["note"] = fixed::kConjecturalNote;
  return out;
}

inline std::string plot(const CommandConfig& cfg) {
  const auto in = read_input(cfg);
  std::ostringstream csv;
  csv << "index,approx,exact\n";
  for (int i = 0; i < cfg.len; ++i) {
    const auto x = in.sequence.entry(i);
    csv << i << ',' << io::decimal_string(x) << ',' << to_string(x) << '\n';
  }
  return csv.str();
}

}  // namespace detail

/// Runs one command line (without the program name). Exit codes: 1 for
/// malformed input or flags, 2 for violated preconditions, 3 for internal
/// verification failures.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Exact cone computations for Betti sequences over regular and hypersurface rings",
               "bettishape"};
  app.require_subcommand(1);

  auto add_input = [&cfg](CLI::App* sub) {
    sub->add_option("--input", cfg.input_path, "sequence JSON file");
    sub->add_option("--inline", cfg.inline_json, "sequence JSON text");
  };
  auto add_cone = [&cfg, &add_input](CLI::App* sub) {
    sub->add_option("--cone", cfg.cone, "regular | total | fixed")
        ->required()
        ->check(CLI::IsMember({"regular", "total", "fixed"}));
    sub->add_option("--n", cfg.n, "dimension")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--mult", cfg.mult, "multiplicity (fixed cone)");
    add_input(sub);
  };

  auto* hk = app.add_subcommand("hk", "Herzog-Kuhl vector of a degree sequence");
  hk->add_option("--degrees", cfg.degrees, "comma-separated strictly increasing degrees")->required();
  hk->add_option("--n", cfg.n, "dimension")->required()->check(CLI::NonNegativeNumber);
  hk->add_option("--normalize-at", cfg.normalize_at, "scale so this entry is 1");

  auto* limit = app.add_subcommand("limit", "distance from a normalized pure vector to its limit ray");
  limit->add_option("--j", cfg.j, "ray index")->required();
  limit->add_option("--t", cfg.t, "degree spacing")->required();
  limit->add_option("--n", cfg.n, "dimension")->required()->check(CLI::NonNegativeNumber);

  auto* phi = app.add_subcommand("phi", "even/odd prefix-sum transform of a finite sequence");
  phi->add_option("--n", cfg.n, "dimension")->check(CLI::NonNegativeNumber);
  add_input(phi);

  auto* member = app.add_subcommand("member", "cone membership with violated constraints");
  add_cone(member);

  auto* decompose = app.add_subcommand("decompose", "nonnegative ray certificate");
  add_cone(decompose);
  decompose->add_option("--triangulation", cfg.triangulation, "1 = omit_odd, 2 = omit_even")
      ->check(CLI::IsMember({1, 2}));

  auto* classify = app.add_subcommand("classify", "shape classification in the regular cone");
  classify->add_option("--n", cfg.n, "dimension")->required()->check(CLI::NonNegativeNumber);
  add_input(classify);

  auto* split = app.add_subcommand("split", "write a total-cone member as phi(v1) + v2");
  split->add_option("--n", cfg.n, "dimension")->required()->check(CLI::NonNegativeNumber);
  add_input(split);

  auto* verify = app.add_subcommand("verify", "oracle sweep over all cone families");
  verify->add_option("--n-max", cfg.n_max, "largest dimension")->check(CLI::NonNegativeNumber);
  verify->add_option("--mult-max", cfg.mult_max, "largest multiplicity")->check(CLI::Range(2, 64));

  auto* plot = app.add_subcommand("plot", "CSV of sequence entries");
  add_input(plot);
  plot->add_option("--len", cfg.len, "number of entries")->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    io::Json result;
    if (hk->parsed()) {
      auto v = pure::herzog_kuhl(pure::DegreeSequence(detail::parse_degrees(cfg.degrees)), cfg.n);
      if (cfg.normalize_at) v = pure::normalize_at(v, *cfg.normalize_at);
      result = io::to_json(v);
    } else if (limit->parsed()) {
      const auto gap = pure::limit_gap(cfg.j, cfg.t, cfg.n);
      result = {{"j", cfg.j}, {"t", cfg.t}, {"n", cfg.n}, {"gap", io::to_json(gap)}};
    } else if (phi->parsed()) {
      const auto in = detail::read_input(cfg);
      BettiVector v = cfg.n >= 0 ? in.as_finite(cfg.n)
                                 : (in.finite ? *in.finite
                                              : throw DomainError("phi needs a finite sequence or --n"));
      result = io::to_json(total::phi(v));
    } else if (member->parsed()) {
      result = detail::member(cfg);
    } else if (decompose->parsed()) {
      result = detail::decompose(cfg);
    } else if (classify->parsed()) {
      auto c = io::to_json(regular::classify(detail::read_input(cfg).as_finite(cfg.n)));
      c["n"] = cfg.n;
      result = c;
    } else if (split->parsed()) {
      result = io::to_json(total::split(detail::read_input(cfg).sequence, cfg.n));
    } else if (verify->parsed()) {
      const auto report = verify::run({cfg.n_max, cfg.mult_max});
      io::Json cases = io::Json::array();
      for (const auto& c : report.cases) {
        cases.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      out << io::Json{{"passed", report.passed()}, {"cases", cases}}.dump(2) << '\n';
      if (!report.passed()) {
        err << "error: verification failed\n";
        return kInternal;
      }
      return kOk;
    } else if (plot->parsed()) {
      out << detail::plot(cfg);
      return kOk;
    }
    out << result.dump(2) << '\n';
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const io::Json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kBadInput;
  } catch (const NotInCone& e) {
    err << "error: not in cone (" << e.constraint() << "): " << e.what() << '\n';
    return kPrecondition;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace bettishape::cli
