// Copyright 2026 The Staircase Authors. All Rights Reserved.
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
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "staircase/errors.hpp"
#include "staircase/genfunc.hpp"
#include "staircase/matrixverify.hpp"
#include "staircase/qsums.hpp"
#include "staircase/series.hpp"
#include "staircase/wordstats.hpp"

namespace staircase::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidArguments = 2,
  kBudgetExceeded = 3,
  kSelfCheckFailed = 4,
  kVerifyMismatch = 5,
};

inline constexpr int kSelfCheckOrder = 8;
inline constexpr int kDefaultQKMax = 12;
inline constexpr int kDefaultMatrixKMax = 6;
inline constexpr int kMatrixPoints = 5;

struct RunConfig {
  std::string subcommand;
  int k = 0;
  int n = 0;
  int order = kDefaultOrder;
  std::string kind = "linear";
  std::string which = "F";
  std::string scope = "all";
  std::optional<int> k_max;
  std::uint64_t seed = 1;
  std::string format = "plain";
  std::string out;
};

inline int cmd_dist(const RunConfig& cfg, std::ostream& out) {
  const StatKind kind = parse_stat_kind(cfg.kind);
  const TDist d = brute_distribution(cfg.n, cfg.k, kind);
  if (cfg.format == "csv") {
    write_distribution_csv(out, d);
    return kOk;
  }
  out << "n=" << d.n << " k=" << d.k << " kind=" << to_string(d.kind) << "\n";
  for (std::size_t m = 0; m < d.counts.size(); ++m) {
    if (d.counts[m] != 0) out << "m=" << m << " count=" << d.counts[m].get_str() << "\n";
  }
  return kOk;
}

namespace detail {

struct GFOutput {
  std::string closed;
  BiSeries series;
};

inline GFOutput compute_gf(GFKind kind, int k, int order) {
  switch (kind) {
    case GFKind::F: {
      BiGF g = F_series(k, order);
      return {g.closed.to_string(), g.series};
    }
    case GFKind::G: {
      BiGF g = G_series(k, order);
      return {g.closed.to_string(), g.series};
    }
    case GFKind::staircase: {
      UniGF g = staircase_gf(k, order);
      return {g.closed.to_string(), to_biseries(g.series)};
    }
    case GFKind::cyclic_staircase: {
      UniGF g = cyclic_staircase_gf(k, order);
      return {g.closed.to_string(), to_biseries(g.series)};
    }
    case GFKind::hertzsprung: {
      UniGF g = hertzsprung_gf(k, order);
      return {g.closed.to_string(), to_biseries(g.series)};
    }
    case GFKind::cyclic_hertzsprung: {
      UniGF g = cyclic_hertzsprung_gf(k, order);
      return {g.closed.to_string(), to_biseries(g.series)};
    }
  }
  throw InvalidArgument("unknown generating function");
}

}  // namespace detail

/// Closed form plus coefficients; exit 4 if a coefficient up to
/// min(order, 8) disagrees with enumeration.
inline int cmd_gf(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GFKind kind = parse_gf_kind(cfg.which);
  const detail::GFOutput g = detail::compute_gf(kind, cfg.k, cfg.order);
  if (cfg.format == "csv") {
    out << "# closed_form: " << g.closed << "\n";
    write_series_csv(out, g.series);
  } else {
    out << to_string(kind) << " k=" << cfg.k << "\n";
    out << "closed form: " << g.closed << "\n";
    for (int n = 0; n <= g.series.order(); ++n) out << "[x^" << n << "] " << g.series[static_cast<std::size_t>(n)] << "\n";
  }
  for (int n = 0; n <= std::min(cfg.order, kSelfCheckOrder); ++n) {
    const Poly want = oracle_coefficient(kind, cfg.k, n).with_var('t');
    if (g.series[static_cast<std::size_t>(n)] != want) {
      err << "self-check failed at n=" << n << ": series " << g.series[static_cast<std::size_t>(n)] << ", enumeration "
          << want << "\n";
      return kSelfCheckFailed;
    }
  }
  return kOk;
}

namespace detail {

inline void write_q_plain(std::ostream& out, const std::vector<QReport>& reports) {
  for (const QReport& r : reports) {
    out << "q_" << r.id << " k=" << r.k_min << ".." << r.k_max << " " << to_string(r.status);
    if (r.corrected_status) out << " (corrected reading " << to_string(*r.corrected_status) << ")";
    out << "\n";
  }
}

inline void write_matrix_plain(std::ostream& out, const std::vector<MatrixCheckRow>& rows) {
  for (const MatrixCheckRow& r : rows) {
    out << r.check << " k=" << r.k;
    if (!r.point.empty()) out << " " << r.point;
    out << (r.pass ? " pass" : " FAIL") << "\n";
    if (!r.pass) out << "  " << r.witness << "\n";
  }
}

}  // namespace detail

/// Emits the report for the scope; exit 5 if any non-ambiguous check failed.
inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const bool q_scope = cfg.scope == "q" || cfg.scope == "all";
  const bool m_scope = cfg.scope == "matrix" || cfg.scope == "all";
  if (!q_scope && !m_scope) throw InvalidArgument("scope must be q, matrix or all");
  if (cfg.k_max && *cfg.k_max < 1) throw InvalidArgument("--k-max must be at least 1");
  if (cfg.scope == "matrix" && cfg.k_max && *cfg.k_max > kMaxSymbolicAlphabet) {
    throw InvalidArgument("matrix checks support --k-max up to " + std::to_string(kMaxSymbolicAlphabet));
  }
  const bool csv = cfg.format == "csv";
  bool failed = false;
  if (q_scope) {
    QVerifyOptions options;
    options.seed = cfg.seed;
    const std::vector<QReport> reports = verify_all_q(cfg.k_max.value_or(kDefaultQKMax), options);
    for (const QReport& r : reports) failed |= r.status == QStatus::mismatched;
    if (cfg.scope == "all") out << "# q-identities\n";
    csv ? write_q_reports_csv(out, reports) : detail::write_q_plain(out, reports);
  }
  if (m_scope) {
    const int k_max = std::min(cfg.k_max.value_or(kDefaultMatrixKMax), kMaxSymbolicAlphabet);
    const std::vector<MatrixCheckRow> rows = run_matrix_checks(2, std::max(k_max, 2), kMatrixPoints, cfg.seed);
    for (const MatrixCheckRow& r : rows) failed |= !r.pass;
    if (cfg.scope == "all") out << (q_scope ? "\n" : "") << "# matrix\n";
    csv ? write_matrix_report_csv(out, rows) : detail::write_matrix_plain(out, rows);
  }
  return failed ? kVerifyMismatch : kOk;
}

inline constexpr const char* kHelpFooter =
    "CSV columns:\n"
    "  dist            n,k,kind,m,count (rows with a zero count are omitted)\n"
    "  gf              '# closed_form: ...' line, then n,t_degree,coefficient\n"
    "  verify q        id,k_range,status,corrected,witness\n"
    "  verify matrix   check,k,point,result,witness\n"
    "Exit codes: 0 ok, 2 invalid arguments, 3 enumeration budget exceeded,\n"
    "  4 generating-function self-check failed, 5 verification mismatch.";

/// Parses `args` (program name first) and runs the chosen subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Distribution of the staircase statistic on words: enumeration, generating functions, verification"};
  app.footer(kHelpFooter);
  app.require_subcommand(1);
  app.name("staircase");
  app.set_help_all_flag("--help-all", "Print help for every subcommand and exit");

  CLI::App* dist = app.add_subcommand("dist", "Distribution of s or cs over all words of length n");
  dist->add_option("--k", cfg.k, "Alphabet size")->required()->check(CLI::Range(2, 64));
  dist->add_option("--n", cfg.n, "Word length")->required()->check(CLI::Range(0, 64));
  dist->add_option("--kind", cfg.kind, "linear or cyclic")->check(CLI::IsMember({"linear", "cyclic"}));

  CLI::App* gf = app.add_subcommand("gf", "Closed form and series of a generating function");
  gf->add_option("--k", cfg.k, "Alphabet size")->required()->check(CLI::Range(2, kMaxSymbolicAlphabet));
  gf->add_option("--which", cfg.which, "F, G, staircase, cyclic-staircase, hertzsprung or cyclic-hertzsprung")
      ->check(CLI::IsMember({"F", "G", "staircase", "cyclic-staircase", "hertzsprung", "cyclic-hertzsprung"}));
  gf->add_option("--order", cfg.order, "Highest power of x in the series")->check(CLI::Range(0, 40));

  CLI::App* verify = app.add_subcommand("verify", "Audit the q identities and the matrix machinery");
  verify->add_option("--scope", cfg.scope, "q, matrix or all")->check(CLI::IsMember({"q", "matrix", "all"}));
  verify->add_option("--k-max", cfg.k_max, "Largest k checked (defaults: 12 for q, 6 for matrix)")->check(CLI::Range(1, 12));
  verify->add_option("--seed", cfg.seed, "Seed for the random evaluation points");

  for (CLI::App* sub : {dist, gf, verify}) {
    sub->add_option("--format", cfg.format, "plain or csv")->check(CLI::IsMember({"plain", "csv"}));
    sub->add_option("--out", cfg.out, "Write output to this file instead of standard output");
  }
  verify->get_option("--format")->default_str("csv");
  cfg.format = "";

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidArguments;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.format.empty()) cfg.format = cfg.subcommand == "verify" ? "csv" : "plain";

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "cannot open " << cfg.out << " for writing\n";
      return kInvalidArguments;
    }
    sink = &file;
  }

  try {
    if (cfg.subcommand == "dist") return cmd_dist(cfg, *sink);
    if (cfg.subcommand == "gf") return cmd_gf(cfg, *sink, err);
    return cmd_verify(cfg, *sink);
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InvalidArgument& e) {
    err << e.what() << "\n";
    return kInvalidArguments;
  }
}

}  // namespace staircase::cli
