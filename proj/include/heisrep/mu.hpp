#pragma once

// Closed-form minimal dimensions of faithful representations (mu) and faithful
// nilrepresentations (mu_nil) of h_m (+) a_n and of the abelian algebras,
// together with the epsilon defect and an exhaustive packing check.
// Everything is integer arithmetic; no floating-point square roots.

#include "heisrep/construct.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace heisrep {

/// floor(sqrt(v)) by Newton iteration on integers.
inline std::uint64_t isqrt(std::uint64_t v) {
  if (v < 2) return v;
  std::uint64_t x = v;
  std::uint64_t y = x / 2 + (x & 1);  // (x + v/x) / 2 at x = v, without overflow
  while (y < x) {
    x = y;
    y = (x + v / x) / 2;
  }
  return x;
}

/// ceil(2 sqrt(k)) = min{t : t^2 >= 4k}.
inline std::uint64_t ceil_2_sqrt(std::uint64_t k) {
  const std::uint64_t four_k = 4 * k;
  const std::uint64_t t = isqrt(four_k);
  return static_cast<unsigned __int128>(t) * t >= four_k ? t : t + 1;
}

inline std::uint64_t mu_nil_value(std::uint64_t m, std::uint64_t n) { return m + ceil_2_sqrt(n + 1); }

/// For n = 0 the h_m value m + 2 applies (and 1 for the one-dimensional
/// algebra at m = n = 0); the m + ceil(2 sqrt n) formula covers n >= 1.
inline std::uint64_t mu_value(std::uint64_t m, std::uint64_t n) {
  if (n == 0) return m == 0 ? 1 : m + 2;
  return m + ceil_2_sqrt(n);
}

inline std::uint64_t mu_nil_abelian(std::uint64_t n) {
  if (n == 0) throw PreconditionError("mu_nil_abelian: requires n >= 1");
  return ceil_2_sqrt(n);
}

/// Schur's min{d : floor(d^2/4) + 1 >= n}; equals ceil(2 sqrt(n-1)) for n >= 2.
inline std::uint64_t mu_abelian(std::uint64_t n) {
  if (n == 0) throw PreconditionError("mu_abelian: requires n >= 1");
  return n == 1 ? 1 : ceil_2_sqrt(n - 1);
}

struct EpsilonValues {
  std::uint64_t epsilon_mu = 0;
  std::uint64_t epsilon_mu_nil = 0;
};

/// Defect of the direct sum against the factors: mu(h_m) + mu(a_n) - mu(h_m (+) a_n),
/// likewise for mu_nil. Throws std::logic_error if a value leaves {1, 2}.
inline EpsilonValues epsilon_values(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw PreconditionError("epsilon_values: requires m >= 1 and n >= 1");
  const auto e_mu = static_cast<std::int64_t>(m + 2 + mu_abelian(n)) - static_cast<std::int64_t>(mu_value(m, n));
  const auto e_nil =
      static_cast<std::int64_t>(m + 2 + mu_nil_abelian(n)) - static_cast<std::int64_t>(mu_nil_value(m, n));
  auto in_range = [](std::int64_t e) { return e == 1 || e == 2; };
  if (!in_range(e_mu) || !in_range(e_nil))
    throw std::logic_error("epsilon_values: defect outside {1, 2} at m=" + std::to_string(m) +
                           " n=" + std::to_string(n));
  return {static_cast<std::uint64_t>(e_mu), static_cast<std::uint64_t>(e_nil)};
}

/// Witness for mu when no packing applies.
enum class SpecialWitness { kCanonicalPi0, kScalar };

using RepWitness = std::variant<PackingParams, SpecialWitness>;

inline std::string witness_name(const RepWitness& w) {
  if (const auto* p = std::get_if<PackingParams>(&w)) return std::to_string(p->a) + "x" + std::to_string(p->b);
  return std::get<SpecialWitness>(w) == SpecialWitness::kCanonicalPi0 ? "canonical-pi0" : "scalar";
}

struct MuResult {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t mu = 0;
  std::uint64_t mu_nil = 0;
  std::optional<EpsilonValues> epsilon;  // defined for m, n >= 1
  PackingParams witness_nil_packing;
  RepWitness witness_rep_packing;
};

inline MuResult mu_result(std::uint64_t m, std::uint64_t n) {
  MuResult r;
  r.m = m;
  r.n = n;
  r.mu = mu_value(m, n);
  r.mu_nil = mu_nil_value(m, n);
  if (m >= 1 && n >= 1) r.epsilon = epsilon_values(m, n);
  r.witness_nil_packing = minimal_packing(n + 1);
  if (n >= 1)
    r.witness_rep_packing = minimal_packing(n);
  else
    r.witness_rep_packing = m >= 1 ? SpecialWitness::kCanonicalPi0 : SpecialWitness::kScalar;
  return r;
}

struct PackingOracleReport {
  bool pass = true;
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> first_mismatch;
  std::uint64_t brute_value = 0;
  std::uint64_t formula_value = 0;
};

/// Exhaustive min{a + b : a <= b, ab >= k} against a closed form, for 1 <= k <= k_max.
/// For each a the smallest admissible b is ceil(k/a); larger b only grow a + b.
template <typename Formula>
PackingOracleReport packing_oracle(std::uint64_t k_max, Formula&& formula) {
  PackingOracleReport report;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    std::uint64_t best = k + 1;  // a = 1, b = k
    for (std::uint64_t a = 1;; ++a) {
      const std::uint64_t b = (k + a - 1) / a;
      if (b < a) break;
      if (a + b < best) best = a + b;
    }
    const std::uint64_t f = formula(k);
    ++report.checked;
    if (best != f) {
      report.pass = false;
      report.first_mismatch = k;
      report.brute_value = best;
      report.formula_value = f;
      return report;
    }
  }
  return report;
}

inline PackingOracleReport packing_oracle(std::uint64_t k_max) {
  return packing_oracle(k_max, [](std::uint64_t k) { return ceil_2_sqrt(k); });
}

}  // namespace heisrep
