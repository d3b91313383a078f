#pragma once

// Command-line front end: construct, verify, mu, selftest.

#include "heisrep/acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace heisrep {

enum class SelftestLevel { kQuick, kFull };

/// Runs the acceptance checks and prints one line per criterion. Returns 0
/// iff every criterion passes.
inline int run_selftest(const AcceptanceBounds& bounds, std::ostream& out) {
  const auto results = run_acceptance(bounds);
  bool all = true;
  for (const auto& r : results) {
    out << format_result(r) << '\n';
    all = all && r.pass();
  }
  out << (all ? "selftest: all criteria passed" : "selftest: FAILED") << '\n';
  return all ? 0 : 1;
}

inline int run_selftest(SelftestLevel level, std::uint64_t seed, std::ostream& out) {
  return run_selftest(level == SelftestLevel::kFull ? AcceptanceBounds::full(seed) : AcceptanceBounds::quick(seed),
                      out);
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of faithful (nil)representations of h_m + a_n"};
  app.require_subcommand(1);

  ConstructOptions construct;
  std::optional<std::size_t> a_flag, b_flag;
  std::string variant = "nil";
  std::string format = "text";
  auto* c = app.add_subcommand("construct", "emit pi_{a,b} (nil) or pi~_{a,b} (scalar)");
  c->add_option("--m", construct.m, "Heisenberg rank m")->required();
  c->add_option("--n", construct.n, "abelian dimension n")->required();
  c->add_option("--a", a_flag, "packing rows (default: minimal packing)");
  c->add_option("--b", b_flag, "packing columns (default: minimal packing)");
  c->add_option("--variant", variant, "nil | scalar")->check(CLI::IsMember({"nil", "scalar"}));
  c->add_option("--format", format, "json | latex | text")->check(CLI::IsMember({"json", "latex", "text"}));

  std::string file;
  std::vector<std::string> checks = all_check_names();
  auto* v = app.add_subcommand("verify", "check a representation JSON file");
  v->add_option("--file", file, "representation JSON")->required();
  v->add_option("--checks", checks, "comma list of hom,faithful,faithful-center,nil,kernel")
      ->delimiter(',')
      ->check(CLI::IsMember(all_check_names()));

  std::optional<std::uint64_t> mu_m, mu_n, m_max, n_max;
  std::string table_format = "text";
  auto* mu = app.add_subcommand("mu", "mu and mu_nil values, single (--m --n) or table (--m-max --n-max)");
  mu->add_option("--m", mu_m, "m");
  mu->add_option("--n", mu_n, "n");
  mu->add_option("--m-max", m_max, "table: largest m");
  mu->add_option("--n-max", n_max, "table: largest n");
  mu->add_option("--format", table_format, "text | csv")->check(CLI::IsMember({"text", "csv"}));

  std::string level = "quick";
  std::optional<std::uint64_t> seed_flag;
  auto* s = app.add_subcommand("selftest", "run the acceptance criteria");
  s->add_option("--level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  s->add_option("--seed", seed_flag, "random seed (default: $HEISREP_SEED or built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c->parsed()) {
      construct.a = a_flag;
      construct.b = b_flag;
      construct.variant = variant == "scalar" ? Variant::kScalar : Variant::kNil;
      construct.format = format == "json" ? OutputFormat::kJson
                         : format == "latex" ? OutputFormat::kLatex
                                             : OutputFormat::kText;
      out << cmd_construct(construct);
      return 0;
    }
    if (v->parsed()) {
      const VerifyOutcome outcome = cmd_verify(file, checks);
      out << outcome.report.dump(2) << '\n';
      return outcome.exit_code;
    }
    if (mu->parsed()) {
      const TableFormat fmt = table_format == "csv" ? TableFormat::kCsv : TableFormat::kText;
      if (m_max || n_max) {
        if (mu_m || mu_n) throw UsageError("use either --m/--n or --m-max/--n-max");
        out << cmd_mu(0, m_max.value_or(0), 0, n_max.value_or(0), fmt);
        return 0;
      }
      if (!mu_m || !mu_n) throw UsageError("mu needs --m and --n, or --m-max and --n-max");
      out << cmd_mu(*mu_m, *mu_m, *mu_n, *mu_n, fmt);
      return 0;
    }
    if (s->parsed()) {
      return run_selftest(level == "full" ? SelftestLevel::kFull : SelftestLevel::kQuick, resolve_seed(seed_flag),
                          out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace heisrep
