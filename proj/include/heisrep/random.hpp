#pragma once

// Seeded generators for randomized checks. Random rationals have numerators
// in [-9, 9] and denominators in [1, 9].

#include "heisrep/construct.hpp"

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>

namespace heisrep {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Explicit flag value, else $HEISREP_SEED, else kDefaultSeed.
inline std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HEISREP_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the default on an unparsable value
    }
  }
  return kDefaultSeed;
}

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<std::int64_t> num(-9, 9);
  std::uniform_int_distribution<std::int64_t> den(1, 9);
  return {num(rng), den(rng)};
}

inline Rational random_nonzero_rational(Rng& rng) {
  for (;;) {
    Rational r = random_rational(rng);
    if (!r.is_zero()) return r;
  }
}

inline Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

inline RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
  return m;
}

inline RatMatrix random_invertible_matrix(Rng& rng, std::size_t n) {
  for (;;) {
    RatMatrix m = random_matrix(rng, n, n);
    if (rank(m) == n) return m;
  }
}

inline std::size_t random_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// P M P^{-1} applied to every image.
inline Representation conjugate(const Representation& rep, const RatMatrix& p) {
  const RatMatrix p_inv = inverse(p);
  std::vector<RatMatrix> mats;
  mats.reserve(rep.matrices.size());
  for (const auto& m : rep.matrices) mats.push_back(mat_mul(p, mat_mul(m, p_inv)));
  return {rep.algebra, rep.space_dim, std::move(mats)};
}

}  // namespace heisrep
