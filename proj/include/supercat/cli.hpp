// Copyright 2026 The supercat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERCAT_CLI_HPP
#define SUPERCAT_CLI_HPP

// Command-line front end:
//
//   supercat table <T|S|C|B> MAX_M MAX_N [--format tsv|json]
//   supercat verify <identity|all> [--max-m] [--max-n] [--max-sum] [--max]
//                   [--force] [--jobs N] [--format tsv|json]
//   supercat map <m2d|d2m|f|f-inv|g|g-inv|pair|unpair|reverse> PATH...
//   supercat enumerate <dyck|motzkin|ballot|ballot-even|pairs> ARGS...
//                      [--count] [--format tsv|json]
//   supercat render PATH [OUT] [--markers]
//
// Exit codes: 0 success, 1 computation or precondition failure, 2 usage.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "supercat/bijections.hpp"
#include "supercat/enumerate.hpp"
#include "supercat/numbers.hpp"
#include "supercat/svg.hpp"
#include "supercat/verify.hpp"

namespace supercat::cli {

enum class OutputFormat { Tsv, Json };

/// Enumeration-backed checks whose largest family exceeds C_kMaxCatalanIndex
/// paths need --force.
inline constexpr std::size_t kMaxCatalanIndex = 17;

struct CliConfig {
  OutputFormat format = OutputFormat::Tsv;
  std::size_t jobs = 1;
  std::optional<std::size_t> max_m, max_n, max_sum, max;
  bool force = false;
  bool markers = false;
  bool count_only = false;
};

/// Failure the command reports with exit code 1.
class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::size_t default_jobs() {
  if (const char* env = std::getenv("SUPERCAT_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------
// table

inline std::optional<ExactInt> table_cell(char kind, std::size_t m, std::size_t n) {
  switch (kind) {
    case 'T':
      if (m == 0 && n == 0) return std::nullopt;
      return super_catalan_T(m, n);
    case 'S': return super_catalan_S(m, n);
    case 'C': return catalan(m + n);
    case 'B':
      if (m < 1 || n < 1 || n > m) return std::nullopt;
      return ballot_number(static_cast<long>(m), static_cast<long>(n));
  }
  throw std::invalid_argument(std::string("unknown table kind ") + kind);
}

inline nlohmann::json table_json(char kind, std::size_t max_m, std::size_t max_n) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t m = 0; m <= max_m; ++m) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t n = 0; n <= max_n; ++n) {
      auto v = table_cell(kind, m, n);
      row.push_back(v ? nlohmann::json(v->str()) : nlohmann::json(nullptr));
    }
    rows.push_back(std::move(row));
  }
  return {{"kind", std::string(1, kind)},
          {"max_m", max_m},
          {"max_n", max_n},
          {"rows", std::move(rows)}};
}

/// Rows m = 0..max_m, columns n = 0..max_n. C tabulates C_{m+n}; B tabulates
/// B(m,n) with "-" outside 1 <= n <= m; T(0,0) is "-".
inline int cmd_table(char kind, std::size_t max_m, std::size_t max_n, const CliConfig& cfg,
                     std::ostream& out, std::ostream& err) {
  if (kind == 'T') err << "warning: T(0,0) is not integral; rendered as '-'\n";
  if (cfg.format == OutputFormat::Json) {
    out << table_json(kind, max_m, max_n).dump(2) << '\n';
    return 0;
  }
  out << kind;
  for (std::size_t n = 0; n <= max_n; ++n) out << '\t' << n;
  out << '\n';
  for (std::size_t m = 0; m <= max_m; ++m) {
    out << m;
    for (std::size_t n = 0; n <= max_n; ++n) {
      auto v = table_cell(kind, m, n);
      out << '\t' << (v ? v->str() : "-");
    }
    out << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

inline nlohmann::json report_json(const VerificationReport& rep) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : rep.failures()) {
    failures.push_back({{"params", f.params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  return {{"identity", rep.identity()}, {"range", rep.range()},
          {"checks", rep.checks()},     {"passed", rep.passed()},
          {"failures", failures},       {"notes", rep.notes()}};
}

inline void write_report_tsv(const VerificationReport& rep, std::ostream& out) {
  out << "identity\t" << rep.identity() << '\n'
      << "range\t" << rep.range() << '\n'
      << "checks\t" << rep.checks() << '\n'
      << "status\t" << (rep.passed() ? "passed" : "FAILED") << '\n';
  for (const auto& n : rep.notes()) out << "note\t" << n << '\n';
  for (const auto& f : rep.failures()) {
    out << "failure\t" << f.params << '\t' << f.lhs << '\t' << f.rhs << '\n';
  }
}

struct VerifyTarget {
  /// Largest Catalan index enumerated for the given config; 0 if formula-only.
  std::function<std::size_t(const CliConfig&)> catalan_index;
  std::function<VerificationReport(const CliConfig&)> run;
};

inline std::size_t bound(const std::optional<std::size_t>& specific,
                         const std::optional<std::size_t>& generic, std::size_t fallback) {
  if (specific) return *specific;
  if (generic) return *generic;
  return fallback;
}

inline std::size_t minus_one(std::size_t v) { return v > 0 ? v - 1 : 0; }

inline const std::map<std::string, VerifyTarget>& verify_targets() {
  using C = const CliConfig&;
  static const std::map<std::string, VerifyTarget> targets = {
      {"theorem1",
       {[](C c) { return minus_one(bound(c.max_sum, c.max, 14)); },
        [](C c) { return verify_theorem1(bound(c.max_sum, c.max, 14), c.jobs); }}},
      {"theorem1-dyck",
       {[](C c) { return minus_one(bound(c.max_sum, c.max, 12)); },
        [](C c) { return verify_theorem1_dyck(bound(c.max_sum, c.max, 12), c.jobs); }}},
      {"rubenstein",
       {[](C) { return std::size_t{0}; },
        [](C c) {
          return verify_rubenstein(bound(c.max_m, c.max, 50), bound(c.max_n, c.max, 50));
        }}},
      {"ballot-sum",
       {[](C) { return std::size_t{0}; },
        [](C c) {
          return verify_ballot_sum(bound(c.max_m, c.max, 30), bound(c.max_n, c.max, 30));
        }}},
      {"symmetry",
       {[](C) { return std::size_t{0}; },
        [](C c) { return verify_symmetry(bound(c.max_sum, c.max, 100)); }}},
      {"parity",
       {[](C) { return std::size_t{0}; },
        [](C c) { return verify_parity(bound(c.max_sum, c.max, 100)); }}},
      {"reversal",
       {[](C c) { return minus_one(bound(c.max_sum, c.max, 12)); },
        [](C c) { return verify_reversal(bound(c.max_sum, c.max, 12)); }}},
      {"theorem4",
       {[](C c) { return bound(c.max_n, c.max, 10); },
        [](C c) { return verify_theorem4(bound(c.max_n, c.max, 10), c.jobs); }}},
      {"pairs",
       {[](C c) { return bound(c.max_n, c.max, 9) + 1; },
        [](C c) { return verify_pairs(bound(c.max_n, c.max, 9)); }}},
      {"counts",
       {[](C c) { return bound(c.max_n, c.max, 12) + 1; },
        [](C c) { return verify_counts(bound(c.max_n, c.max, 12)); }}},
      {"classes",
       {[](C c) { return bound(c.max_n, c.max, 10) + 1; },
        [](C c) { return verify_classes(bound(c.max_n, c.max, 10)); }}},
      {"bijection-f",
       {[](C c) { return bound(c.max_n, c.max, 8) + 1; },
        [](C c) { return verify_bijection_f(bound(c.max_n, c.max, 8)); }}},
      {"bijection-g",
       {[](C c) { return bound(c.max_n, c.max, 8) + 1; },
        [](C c) { return verify_bijection_g(bound(c.max_n, c.max, 8)); }}},
      {"pair-map",
       {[](C c) { return bound(c.max_n, c.max, 8) + 1; },
        [](C c) { return verify_pair_map(bound(c.max_n, c.max, 8)); }}},
  };
  return targets;
}

inline int cmd_verify(const std::string& identity, const CliConfig& cfg, std::ostream& out,
                      std::ostream& err) {
  const auto& targets = verify_targets();
  std::vector<std::string> names;
  if (identity == "all") {
    for (const auto& [name, _] : targets) names.push_back(name);
  } else {
    names.push_back(identity);
  }
  for (const auto& name : names) {
    const std::size_t index = targets.at(name).catalan_index(cfg);
    if (index > kMaxCatalanIndex && !cfg.force) {
      err << "error: '" << name << "' would enumerate C_" << index
          << " paths; bounds above the desk-scale limit need --force\n";
      return 2;
    }
  }

  bool passed = true;
  nlohmann::json reports = nlohmann::json::array();
  for (std::size_t i = 0; i < names.size(); ++i) {
    const VerificationReport rep = targets.at(names[i]).run(cfg);
    passed = passed && rep.passed();
    if (cfg.format == OutputFormat::Json) {
      reports.push_back(report_json(rep));
    } else {
      if (i > 0) out << '\n';
      write_report_tsv(rep, out);
    }
  }
  if (cfg.format == OutputFormat::Json) {
    out << (identity == "all" ? reports : reports.front()).dump(2) << '\n';
  }
  return passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// map

inline void emit_pair(const DyckPair& p, std::ostream& out) {
  out << to_string(p.first) << '\n' << to_string(p.second) << '\n';
}

inline int cmd_map(const std::string& name, std::vector<std::string> paths, std::istream& in,
                   std::ostream& out) {
  if (name == "unpair") {
    if (paths.empty()) {
      std::string a, b;
      if (!std::getline(in, a) || !std::getline(in, b)) {
        throw CommandError("unpair: expected two lines on stdin");
      }
      paths = {a, b};
    }
    if (paths.size() != 2) throw CommandError("unpair: expected exactly two paths");
    out << to_string(from_pair({parse_dyck(paths[0]), parse_dyck(paths[1])})) << '\n';
    return 0;
  }
  if (paths.size() != 1) throw CommandError(name + ": expected exactly one path");
  const std::string& text = paths.front();
  if (name == "m2d") {
    out << to_string(motzkin_to_dyck(parse_motzkin(text))) << '\n';
  } else if (name == "d2m") {
    out << to_string(dyck_to_motzkin(parse_dyck(text))) << '\n';
  } else if (name == "reverse") {
    const auto p = parse_motzkin(text);
    if (!validate(p, family::Motzkin2{})) {
      throw CommandError("reverse: '" + text + "' is not a 2-Motzkin path");
    }
    out << to_string(reverse(p)) << '\n';
  } else if (name == "f") {
    out << to_string(injection_f(parse_dyck(text))) << '\n';
  } else if (name == "f-inv") {
    out << to_string(injection_f_inverse(parse_dyck(text))) << '\n';
  } else if (name == "g") {
    out << to_string(injection_g(parse_dyck(text))) << '\n';
  } else if (name == "g-inv") {
    out << to_string(injection_g_inverse(parse_dyck(text))) << '\n';
  } else if (name == "pair") {
    for (const auto& p : to_pair(parse_dyck(text))) emit_pair(p, out);
  } else {
    throw std::invalid_argument("unknown map " + name);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// enumerate

inline int cmd_enumerate(const std::string& fam, const std::vector<long>& args,
                         const CliConfig& cfg, std::ostream& out) {
  auto need = [&](std::size_t k) {
    if (args.size() != k) {
      throw CLI::ValidationError(fam + " takes " + std::to_string(k) + " integer argument(s)");
    }
    for (long a : args) {
      if (a < 0) throw CLI::ValidationError("arguments must be nonnegative");
    }
  };

  if (fam == "pairs") {
    need(1);
    auto stream = enum_pairs_total(static_cast<std::size_t>(args[0]));
    std::uint64_t count = 0;
    nlohmann::json all = nlohmann::json::array();
    while (auto p = stream.next()) {
      ++count;
      if (cfg.count_only) continue;
      if (cfg.format == OutputFormat::Json) {
        all.push_back({to_string(p->first), to_string(p->second)});
      } else {
        out << to_string(p->first) << '\t' << to_string(p->second) << '\n';
      }
    }
    if (cfg.count_only) out << count << '\n';
    else if (cfg.format == OutputFormat::Json) out << all.dump(2) << '\n';
    return 0;
  }

  auto drain = [&](auto gen) {
    std::uint64_t count = 0;
    nlohmann::json all = nlohmann::json::array();
    for (; !gen.done(); gen.advance()) {
      ++count;
      if (cfg.count_only) continue;
      if (cfg.format == OutputFormat::Json) all.push_back(to_string(gen.current()));
      else out << to_string(gen.current()) << '\n';
    }
    if (cfg.count_only) out << count << '\n';
    else if (cfg.format == OutputFormat::Json) out << all.dump(2) << '\n';
    return 0;
  };

  if (fam == "dyck") {
    need(1);
    return drain(enum_dyck(static_cast<std::size_t>(args[0])));
  }
  if (fam == "motzkin") {
    need(1);
    return drain(enum_motzkin2(static_cast<std::size_t>(args[0])));
  }
  if (fam == "ballot") {
    need(2);
    if (args[1] < 1 || args[1] > args[0]) {
      throw CLI::ValidationError("ballot needs 1 <= r <= n");
    }
    return drain(enum_ballot(static_cast<int>(args[0]), static_cast<int>(args[1])));
  }
  if (fam == "ballot-even") {
    need(1);
    return drain(enum_ballot_even(static_cast<std::size_t>(args[0])));
  }
  throw std::invalid_argument("unknown family " + fam);
}

// ---------------------------------------------------------------------------
// render

inline int cmd_render(const std::string& text, const std::optional<std::string>& out_path,
                      const CliConfig& cfg, std::ostream& out) {
  const TwoMotzkinPath path = parse_motzkin(text);
  std::optional<PathMarkers> marks;
  if (cfg.markers) {
    auto dyck = as_dyck(path);
    if (!dyck) throw CommandError("render --markers: '" + text + "' has level steps");
    marks = markers(*dyck);
  }
  std::string svg;
  if (auto dyck = as_dyck(path)) svg = render_svg(*dyck, marks);
  else svg = render_svg(path, marks);

  if (!out_path) {
    out << svg;
    return 0;
  }
  std::ofstream file(*out_path);
  if (!file) throw CommandError("cannot open '" + *out_path + "' for writing");
  file << svg;
  file.close();
  if (!file) throw CommandError("failed writing '" + *out_path + "'");
  return 0;
}

// ---------------------------------------------------------------------------

/// Parses argv and dispatches. Never calls std::exit.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact super Catalan numbers and lattice-path bijections", "supercat"};
  app.require_subcommand(1);

  CliConfig cfg;
  cfg.jobs = default_jobs();
  std::string format = "tsv";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  };

  std::string table_kind;
  std::size_t table_m = 0, table_n = 0;
  auto* table = app.add_subcommand("table", "Tabulate T, S, C or B");
  table->add_option("kind", table_kind, "T, S, C (C_{m+n}) or B (B(m,n))")
      ->required()
      ->check(CLI::IsMember({"T", "S", "C", "B"}));
  table->add_option("max_m", table_m)->required();
  table->add_option("max_n", table_n)->required();
  add_format(table);

  std::string identity;
  std::vector<std::string> identities{"all"};
  for (const auto& [name, _] : verify_targets()) identities.push_back(name);
  auto* verify = app.add_subcommand("verify", "Check an identity over a parameter range");
  verify->add_option("identity", identity)->required()->check(CLI::IsMember(identities));
  verify->add_option("--max-m", cfg.max_m, "Upper bound on m");
  verify->add_option("--max-n", cfg.max_n, "Upper bound on n");
  verify->add_option("--max-sum", cfg.max_sum, "Upper bound on m+n");
  verify->add_option("--max", cfg.max, "Bound used where no specific bound is given");
  verify->add_flag("--force", cfg.force, "Allow enumerations beyond C_17 paths");
  verify->add_option("--jobs", cfg.jobs, "Worker threads (default $SUPERCAT_JOBS or cores)")
      ->check(CLI::PositiveNumber);
  add_format(verify);

  std::string map_name;
  std::vector<std::string> map_paths;
  auto* map = app.add_subcommand("map", "Apply a bijection to a path");
  map->add_option("map", map_name)
      ->required()
      ->check(CLI::IsMember({"m2d", "d2m", "f", "f-inv", "g", "g-inv", "pair", "unpair",
                             "reverse"}));
  map->add_option("paths", map_paths, "Input path(s) over U/D/S/W");

  std::string fam;
  std::vector<long> fam_args;
  auto* enumerate = app.add_subcommand("enumerate", "List a path family");
  enumerate->add_option("family", fam)
      ->required()
      ->check(CLI::IsMember({"dyck", "motzkin", "ballot", "ballot-even", "pairs"}));
  enumerate->add_option("args", fam_args, "Family parameters");
  enumerate->add_flag("--count", cfg.count_only, "Print only the number of paths");
  add_format(enumerate);

  std::string render_path;
  std::optional<std::string> render_out;
  auto* render = app.add_subcommand("render", "Draw a path as SVG");
  render->add_option("path", render_path)->required();
  render->add_option("out", render_out, "Output file (default stdout)");
  render->add_flag("--markers", cfg.markers, "Label X and R");

  try {
    app.parse(argc, argv);
    cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Tsv;
    if (table->parsed()) return cmd_table(table_kind[0], table_m, table_n, cfg, out, err);
    if (verify->parsed()) return cmd_verify(identity, cfg, out, err);
    if (map->parsed()) return cmd_map(map_name, map_paths, in, out);
    if (enumerate->parsed()) return cmd_enumerate(fam, fam_args, cfg, out);
    if (render->parsed()) return cmd_render(render_path, render_out, cfg, out);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace supercat::cli

#endif  // SUPERCAT_CLI_HPP
