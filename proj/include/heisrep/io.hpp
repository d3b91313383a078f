#pragma once

// Serialization: JSON for algebras, representations and check reports;
// symbolic text and LaTeX renderings of representation matrices.

#include "heisrep/construct.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace heisrep {

using json = nlohmann::json;

inline json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

inline json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

inline json to_json(const LieAlgebra& alg) {
  json brackets = json::array();
  for (const auto& [pair, coeffs] : alg.nonzero_brackets()) {
    json c = json::object();
    for (const auto& [k, v] : coeffs) c[std::to_string(k)] = v.str();
    brackets.push_back({{"i", pair.first}, {"j", pair.second}, {"coeffs", std::move(c)}});
  }
  return {{"dim", alg.dim()}, {"basis", alg.labels()}, {"brackets", std::move(brackets)}};
}

inline json to_json(const Representation& rep) {
  json mats = json::array();
  for (const auto& m : rep.matrices) mats.push_back(to_json(m));
  return {{"algebra", to_json(rep.algebra)}, {"space_dim", rep.space_dim}, {"matrices", std::move(mats)}};
}

namespace detail {

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::size_t require_count(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ParseError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

inline Rational parse_entry(const json& j) {
  if (!j.is_string()) throw ParseError("matrix and coefficient entries must be strings like \"p\" or \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

}  // namespace detail

inline LieAlgebra algebra_from_json(const json& j) {
  const std::size_t dim = detail::require_count(j, "dim");
  const json& basis = detail::require(j, "basis");
  if (!basis.is_array() || basis.size() != dim) throw ParseError("'basis' must list exactly 'dim' labels");
  std::vector<std::string> labels;
  for (const auto& l : basis) {
    if (!l.is_string()) throw ParseError("basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const json& brs = detail::require(j, "brackets");
  if (!brs.is_array()) throw ParseError("'brackets' must be an array");
  std::vector<BracketEntry> entries;
  for (const auto& b : brs) {
    BracketEntry e{detail::require_count(b, "i"), detail::require_count(b, "j"), {}};
    const json& coeffs = detail::require(b, "coeffs");
    if (!coeffs.is_object()) throw ParseError("'coeffs' must be an object");
    for (const auto& [key, value] : coeffs.items()) {
      if (key.empty() || !std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("coefficient key '" + key + "' is not a basis index");
      e.coeffs[std::stoul(key)] = detail::parse_entry(value);
    }
    entries.push_back(std::move(e));
  }
  try {
    return {std::move(labels), entries};
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

inline Representation representation_from_json(const json& j) {
  LieAlgebra alg = algebra_from_json(detail::require(j, "algebra"));
  const std::size_t n = detail::require_count(j, "space_dim");
  const json& mats = detail::require(j, "matrices");
  if (!mats.is_array() || mats.size() != alg.dim()) throw ParseError("'matrices' must hold one matrix per basis element");
  std::vector<RatMatrix> out;
  for (const auto& m : mats) {
    if (!m.is_array() || m.size() != n) throw ParseError("each matrix must have 'space_dim' rows");
    RatMatrix mat(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!m[r].is_array() || m[r].size() != n) throw ParseError("each matrix row must have 'space_dim' entries");
      for (std::size_t c = 0; c < n; ++c) mat(r, c) = detail::parse_entry(m[r][c]);
    }
    out.push_back(std::move(mat));
  }
  return {std::move(alg), n, std::move(out)};
}

/// Parses text as representation JSON; malformed JSON becomes ParseError.
inline Representation representation_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return representation_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed representation: ") + e.what());
  }
}

/// Coordinate symbol for a basis label: X_1 -> x_1, Z -> z, A_3 -> a_3.
inline std::string coordinate_symbol(std::string label) {
  if (!label.empty()) label[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(label[0])));
  return label;
}

/// Entry-by-entry symbolic form of the image of a general element
/// sum_i c_i e_i: each cell lists the coordinates that land there.
inline std::vector<std::vector<std::string>> symbolic_grid(const Representation& rep) {
  const std::size_t n = rep.space_dim;
  std::vector<std::vector<std::string>> grid(n, std::vector<std::string>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::string cell;
      for (std::size_t i = 0; i < rep.algebra.dim(); ++i) {
        const Rational& v = rep.matrices[i](r, c);
        if (v.is_zero()) continue;
        const std::string sym = coordinate_symbol(rep.algebra.labels()[i]);
        std::string term;
        if (v.is_one())
          term = sym;
        else if (v == Rational(-1))
          term = "-" + sym;
        else
          term = v.str() + "*" + sym;
        if (!cell.empty() && term.front() != '-') cell += "+";
        cell += term;
      }
      grid[r][c] = cell.empty() ? "0" : cell;
    }
  return grid;
}

inline std::string symbolic_text(const Representation& rep) {
  const auto grid = symbolic_grid(rep);
  std::size_t width = 1;
  for (const auto& row : grid)
    for (const auto& cell : row) width = std::max(width, cell.size());
  std::ostringstream os;
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width + 2 - row[c].size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

namespace detail {

// x_10 -> x_{10}
inline std::string latex_symbol(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '_' && i + 1 < s.size()) {
      out += "_{";
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) != 0)) out += s[j++];
      out += "}";
      i = j - 1;
    } else if (s[i] == '*') {
      out += " ";
    } else {
      out += s[i];
    }
  }
  return out;
}

inline std::string latex_pmatrix(const std::vector<std::vector<std::string>>& cells) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) os << (c ? " & " : "") << cells[r][c];
    os << (r + 1 < cells.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}";
  return os.str();
}

}  // namespace detail

/// A single symbolic matrix for the general element, then one pmatrix per basis element.
inline std::string latex(const Representation& rep) {
  auto grid = symbolic_grid(rep);
  for (auto& row : grid)
    for (auto& cell : row) cell = detail::latex_symbol(cell);
  std::ostringstream os;
  os << "\\pi\\left(";
  for (std::size_t i = 0; i < rep.algebra.dim(); ++i)
    os << (i ? " + " : "") << detail::latex_symbol(coordinate_symbol(rep.algebra.labels()[i])) << " "
       << detail::latex_symbol(rep.algebra.labels()[i]);
  os << "\\right) =\n" << detail::latex_pmatrix(grid) << "\n";
  for (std::size_t i = 0; i < rep.algebra.dim(); ++i) {
    const RatMatrix& m = rep.matrices[i];
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const Rational& v = m(r, c);
        if (v.is_integer()) {
          cells[r][c] = v.str();
          continue;
        }
        const mpq_class q = v.to_mpq();
        const mpz_class num = abs(q.get_num());
        cells[r][c] = (v.sign() < 0 ? "-\\frac{" : "\\frac{") + num.get_str() + "}{" + q.get_den().get_str() + "}";
      }
    os << "\n\\pi(" << detail::latex_symbol(rep.algebra.labels()[i]) << ") =\n" << detail::latex_pmatrix(cells) << "\n";
  }
  return os.str();
}

/// One check outcome: { "check": name, "pass": bool, "witness": ... }.
struct CheckReport {
  std::string check;
  bool pass = false;
  json witness;  // null when there is nothing to report
};

inline json to_json(const CheckReport& r) {
  json j = {{"check", r.check}, {"pass", r.pass}};
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

}  // namespace heisrep
