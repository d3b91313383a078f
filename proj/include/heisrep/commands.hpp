#pragma once

// The work behind each CLI subcommand, as plain functions returning text or
// a JSON report plus exit code. Argument parsing lives in cli.hpp.

#include "heisrep/io.hpp"
#include "heisrep/mu.hpp"
#include "heisrep/repcheck.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace heisrep {

/// Invalid command parameters.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Variant { kNil, kScalar };
enum class OutputFormat { kJson, kLatex, kText };

struct ConstructOptions {
  std::size_t m = 0;
  std::size_t n = 0;
  // Unset means the minimal packing for the variant.
  std::optional<std::size_t> a;
  std::optional<std::size_t> b;
  Variant variant = Variant::kNil;
  OutputFormat format = OutputFormat::kText;
};

inline Representation construct_representation(const ConstructOptions& o) {
  if ((o.a && *o.a == 0) || (o.b && *o.b == 0)) throw UsageError("--a and --b must be >= 1");
  if (o.variant == Variant::kScalar && o.n == 0)
    throw UsageError("--variant scalar requires --n >= 1 (for n = 0 use --variant nil --a 1 --b 1, which is pi_0)");
  if (o.a.has_value() != o.b.has_value()) throw UsageError("give both --a and --b, or neither");
  PackingParams p = o.variant == Variant::kNil ? minimal_packing(o.n + 1) : minimal_packing(o.n);
  if (o.a) p = PackingParams(*o.a, *o.b);
  return o.variant == Variant::kNil ? pi_ab(o.m, o.n, p) : pi_tilde_ab(o.m, o.n, p);
}

inline std::string cmd_construct(const ConstructOptions& o) {
  const Representation rep = construct_representation(o);
  switch (o.format) {
    case OutputFormat::kJson:
      return to_json(rep).dump(2) + "\n";
    case OutputFormat::kLatex:
      return latex(rep);
    case OutputFormat::kText:
      break;
  }
  return symbolic_text(rep);
}

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names{"hom", "faithful", "faithful-center", "nil", "kernel"};
  return names;
}

struct VerifyOutcome {
  int exit_code = 0;
  json report;
};

namespace detail {

inline json vectors_json(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

inline VerifyOutcome verify_failure(int code, const std::string& source, const std::string& check,
                                    const std::string& message) {
  json reports = json::array();
  reports.push_back(to_json(CheckReport{check, false, json{{"error", message}}}));
  return {code, json{{"file", source}, {"pass", false}, {"reports", std::move(reports)}}};
}

}  // namespace detail

/// Runs the requested checks on representation JSON text. Exit codes:
/// 0 all pass, 1 some check failed, 2 unreadable input, 3 a check's
/// precondition does not hold.
inline VerifyOutcome cmd_verify_text(const std::string& text, const std::vector<std::string>& checks,
                                     const std::string& source = "<input>") {
  for (const auto& c : checks)
    if (std::find(all_check_names().begin(), all_check_names().end(), c) == all_check_names().end())
      throw UsageError("unknown check '" + c + "'");

  Representation rep;
  try {
    rep = representation_from_string(text);
  } catch (const ParseError& e) {
    return detail::verify_failure(2, source, "parse", e.what());
  } catch (const ShapeError& e) {
    return detail::verify_failure(2, source, "parse", e.what());
  }

  const auto& labels = rep.algebra.labels();
  json reports = json::array();
  bool all_pass = true;
  bool precondition_failed = false;
  for (const auto& name : checks) {
    CheckReport r{name, false, nullptr};
    try {
      if (name == "hom") {
        const auto h = is_homomorphism(rep);
        r.pass = h.pass;
        if (!h.pass)
          r.witness = {{"pair", json::array({labels[h.failing_pair->first], labels[h.failing_pair->second]})},
                       {"residual", to_json(h.residual)}};
      } else if (name == "faithful") {
        const Subspace k = rep_kernel(rep);
        r.pass = k.is_zero();
        if (!r.pass) r.witness = {{"kernel_basis", detail::vectors_json(k.basis)}};
      } else if (name == "faithful-center") {
        r.pass = is_faithful_via_center(rep);
        r.witness = {{"center_dim", center(rep.algebra).dim()}};
      } else if (name == "nil") {
        const EngelFlag f = engel_flag(rep);
        r.pass = f.success;
        r.witness = {{"stage_dims", f.stage_dims}};
        if (f.failed_stage) r.witness["failed_stage"] = *f.failed_stage;
      } else if (name == "kernel") {
        const Subspace k = rep_kernel(rep);
        // The kernel vectors must really map to zero and satisfy rank-nullity.
        bool consistent = rank(vectorized_images(rep)) + k.dim() == rep.algebra.dim();
        for (const auto& v : k.basis) consistent = consistent && rep.image(v).is_zero();
        r.pass = consistent;
        r.witness = {{"dim", k.dim()}, {"basis", detail::vectors_json(k.basis)}};
      }
    } catch (const PreconditionError& e) {
      precondition_failed = true;
      r.pass = false;
      r.witness = {{"error", e.what()}};
    }
    all_pass = all_pass && r.pass;
    reports.push_back(to_json(r));
  }
  const int code = precondition_failed ? 3 : (all_pass ? 0 : 1);
  return {code, json{{"file", source}, {"pass", all_pass}, {"reports", std::move(reports)}}};
}

inline VerifyOutcome cmd_verify(const std::string& path, const std::vector<std::string>& checks) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return detail::verify_failure(2, path, "parse", "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return cmd_verify_text(ss.str(), checks, path);
}

enum class TableFormat { kText, kCsv };

inline std::vector<std::string> mu_row(const MuResult& r, TableFormat fmt) {
  const std::string missing = fmt == TableFormat::kCsv ? "" : "-";
  return {std::to_string(r.m),
          std::to_string(r.n),
          std::to_string(r.mu),
          std::to_string(r.mu_nil),
          r.epsilon ? std::to_string(r.epsilon->epsilon_mu) : missing,
          r.epsilon ? std::to_string(r.epsilon->epsilon_mu_nil) : missing,
          witness_name(r.witness_nil_packing),
          witness_name(r.witness_rep_packing)};
}

/// Rows for every (m, n) with m in [m_lo, m_hi], n in [n_lo, n_hi].
inline std::string cmd_mu(std::uint64_t m_lo, std::uint64_t m_hi, std::uint64_t n_lo, std::uint64_t n_hi,
                          TableFormat fmt) {
  const std::vector<std::string> header{"m",          "n", "mu", "mu_nil", "epsilon_mu", "epsilon_mu_nil",
                                        "witness_nil", "witness_rep"};
  std::vector<std::vector<std::string>> rows{header};
  for (std::uint64_t m = m_lo; m <= m_hi; ++m)
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) rows.push_back(mu_row(mu_result(m, n), fmt));
  std::ostringstream os;
  if (fmt == TableFormat::kCsv) {
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size(); ++c) os << row[c] << (c + 1 < row.size() ? "," : "\n");
    return os.str();
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << std::setw(static_cast<int>(width[c])) << row[c];
      os << (c + 1 < row.size() ? "  " : "\n");
    }
  }
  return os.str();
}

}  // namespace heisrep
