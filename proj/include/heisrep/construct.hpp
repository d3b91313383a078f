#pragma once

// The algebras h_m (+) a_n and their explicit representations: the canonical
// (m+2)-dimensional representation of h_m, the block nilrepresentations
// pi_{a,b} on k^{m+a+b}, and the scalar-shifted family pi~_{a,b}.
//
// Basis order is fixed everywhere: X_1..X_m, Y_1..Y_m, Z, A_1..A_n.

#include "heisrep/lie_algebra.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace heisrep {

/// Thrown when an operation is called outside its domain (m = 0 for pi_0,
/// n = 0 for the scalar family, non-nilpotent input to the center test, ...).
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct HeisenbergAbelianParams {
  std::size_t m = 0;
  std::size_t n = 0;

  [[nodiscard]] std::size_t dim() const { return 2 * m + 1 + n; }
  // 1-based generator numbers, matching the labels X_i, Y_i, A_r.
  [[nodiscard]] std::size_t x_index(std::size_t i) const { return i - 1; }
  [[nodiscard]] std::size_t y_index(std::size_t i) const { return m + i - 1; }
  [[nodiscard]] std::size_t z_index() const { return 2 * m; }
  [[nodiscard]] std::size_t a_index(std::size_t r) const { return 2 * m + r; }
};

struct PackingParams {
  std::size_t a = 1;
  std::size_t b = 1;

  PackingParams() = default;
  PackingParams(std::size_t a_rows, std::size_t b_cols) : a(a_rows), b(b_cols) {
    if (a == 0 || b == 0) throw PreconditionError("PackingParams: a and b must be >= 1");
  }
  friend bool operator==(const PackingParams&, const PackingParams&) = default;
};

/// One square matrix of size space_dim per algebra basis element.
struct Representation {
  LieAlgebra algebra;
  std::size_t space_dim = 0;
  std::vector<RatMatrix> matrices;

  Representation() = default;
  Representation(LieAlgebra alg, std::size_t dim, std::vector<RatMatrix> mats)
      : algebra(std::move(alg)), space_dim(dim), matrices(std::move(mats)) {
    if (matrices.size() != algebra.dim())
      throw ShapeError("Representation: " + std::to_string(matrices.size()) + " matrices for a " +
                       std::to_string(algebra.dim()) + "-dimensional algebra");
    for (const auto& mat : matrices)
      if (mat.rows() != space_dim || mat.cols() != space_dim)
        throw ShapeError("Representation: every matrix must be " + std::to_string(space_dim) + "x" +
                         std::to_string(space_dim));
  }

  /// Image of a general element: the linear combination of basis images.
  [[nodiscard]] RatMatrix image(std::span<const Rational> coords) const {
    if (coords.size() != algebra.dim()) throw ShapeError("Representation::image: coordinate length mismatch");
    RatMatrix out(space_dim, space_dim);
    for (std::size_t i = 0; i < coords.size(); ++i) mat_axpy(out, coords[i], matrices[i]);
    return out;
  }

  friend bool operator==(const Representation&, const Representation&) = default;
};

inline LieAlgebra build_heisenberg_abelian(const HeisenbergAbelianParams& p) {
  std::vector<std::string> labels;
  labels.reserve(p.dim());
  for (std::size_t i = 1; i <= p.m; ++i) labels.push_back("X_" + std::to_string(i));
  for (std::size_t i = 1; i <= p.m; ++i) labels.push_back("Y_" + std::to_string(i));
  labels.emplace_back("Z");
  for (std::size_t r = 1; r <= p.n; ++r) labels.push_back("A_" + std::to_string(r));
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 1; i <= p.m; ++i)
    brackets.push_back({p.x_index(i), p.y_index(i), SparseVector{{p.z_index(), Rational(1)}}});
  return {std::move(labels), brackets};
}

/// a x m block whose first row is x.
inline RatMatrix tau_a(std::size_t a, std::size_t m, std::span<const Rational> x) {
  if (a == 0) throw PreconditionError("tau_a: a must be >= 1");
  if (x.size() != m) throw ShapeError("tau_a: expected " + std::to_string(m) + " coordinates");
  RatMatrix out(a, m);
  for (std::size_t i = 0; i < m; ++i) out(0, i) = x[i];
  return out;
}

/// m x b block whose first column is y.
inline RatMatrix tau_b(std::size_t b, std::size_t m, std::span<const Rational> y) {
  if (b == 0) throw PreconditionError("tau_b: b must be >= 1");
  if (y.size() != m) throw ShapeError("tau_b: expected " + std::to_string(m) + " coordinates");
  RatMatrix out(m, b);
  for (std::size_t i = 0; i < m; ++i) out(i, 0) = y[i];
  return out;
}

/// a x b block holding (z, a_1, ..., a_n) in row-major order. Slots past
/// n + 1 stay zero; coordinates past slot a*b are dropped.
inline RatMatrix tau_ab(std::size_t a, std::size_t b, std::size_t n, const Rational& z,
                        std::span<const Rational> avec) {
  if (a == 0 || b == 0) throw PreconditionError("tau_ab: a and b must be >= 1");
  if (avec.size() != n) throw ShapeError("tau_ab: expected " + std::to_string(n) + " abelian coordinates");
  RatMatrix out(a, b);
  for (std::size_t t = 0; t <= n && t < a * b; ++t) out(t / b, t % b) = t == 0 ? z : avec[t - 1];
  return out;
}

/// Row/column position of center coordinate t (0 = Z, r = A_r) inside pi_{a,b},
/// or nullopt when the coordinate is dropped by the packing.
inline std::optional<std::pair<std::size_t, std::size_t>> center_slot(std::size_t m, const PackingParams& p,
                                                                      std::size_t t) {
  if (t >= p.a * p.b) return std::nullopt;
  return std::pair{t / p.b, p.a + m + t % p.b};
}

/// pi_{a,b} applied to a general element of h_m (+) a_n. Blocks (a, m, b):
///   [ 0  tau_a(X)  tau_ab(zZ + A) ]
///   [ 0  0         tau_b(Y)       ]
///   [ 0  0         0              ]
inline RatMatrix pi_ab_image(std::size_t m, std::size_t n, const PackingParams& p, std::span<const Rational> coords) {
  const HeisenbergAbelianParams hp{m, n};
  if (coords.size() != hp.dim()) throw ShapeError("pi_ab_image: coordinate length mismatch");
  const std::size_t size = m + p.a + p.b;
  const auto xs = coords.subspan(0, m);
  const auto ys = coords.subspan(m, m);
  const auto as = coords.subspan(hp.a_index(1), n);
  RatMatrix out(size, size);
  const RatMatrix top = tau_a(p.a, m, xs);
  const RatMatrix right = tau_b(p.b, m, ys);
  const RatMatrix corner = tau_ab(p.a, p.b, n, coords[hp.z_index()], as);
  for (std::size_t i = 0; i < p.a; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, p.a + j) = top(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < p.b; ++j) out(p.a + i, p.a + m + j) = right(i, j);
  for (std::size_t i = 0; i < p.a; ++i)
    for (std::size_t j = 0; j < p.b; ++j) out(i, p.a + m + j) = corner(i, j);
  return out;
}

inline Representation pi_ab(std::size_t m, std::size_t n, const PackingParams& p) {
  const HeisenbergAbelianParams hp{m, n};
  LieAlgebra alg = build_heisenberg_abelian(hp);
  std::vector<RatMatrix> mats;
  mats.reserve(hp.dim());
  for (std::size_t i = 0; i < hp.dim(); ++i) mats.push_back(pi_ab_image(m, n, p, alg.basis_vector(i)));
  return {std::move(alg), m + p.a + p.b, std::move(mats)};
}

/// pi~_{a,b}: A_n acts as the identity; every other basis element acts as
/// under pi_{a,b} with the abelian part truncated to A_1..A_{n-1}.
inline Representation pi_tilde_ab(std::size_t m, std::size_t n, const PackingParams& p) {
  if (n == 0) throw PreconditionError("pi_tilde_ab: requires n >= 1 (A_n carries the scalar part)");
  const HeisenbergAbelianParams hp{m, n};
  LieAlgebra alg = build_heisenberg_abelian(hp);
  const std::size_t size = m + p.a + p.b;
  std::vector<RatMatrix> mats;
  mats.reserve(hp.dim());
  for (std::size_t i = 0; i + 1 < hp.dim(); ++i) {
    ElementCoords truncated(hp.dim() - 1);
    truncated[i] = 1;
    mats.push_back(pi_ab_image(m, n - 1, p, truncated));
  }
  mats.push_back(RatMatrix::identity(size));
  return {std::move(alg), size, std::move(mats)};
}

/// The canonical (m+2)-dimensional representation of h_m:
/// X_i -> E_{1,i+1}, Y_i -> E_{i+1,m+2}, Z -> E_{1,m+2} (1-based).
inline Representation canonical_pi0(std::size_t m) {
  if (m == 0) throw PreconditionError("canonical_pi0: requires m >= 1");
  const HeisenbergAbelianParams hp{m, 0};
  LieAlgebra alg = build_heisenberg_abelian(hp);
  const std::size_t size = m + 2;
  std::vector<RatMatrix> mats;
  for (std::size_t i = 1; i <= m; ++i) mats.push_back(RatMatrix::unit(size, size, 0, i));
  for (std::size_t i = 1; i <= m; ++i) mats.push_back(RatMatrix::unit(size, size, i, m + 1));
  mats.push_back(RatMatrix::unit(size, size, 0, m + 1));
  return {std::move(alg), size, std::move(mats)};
}

/// (a, b) minimizing a + b subject to a*b >= k; among minimizers the one
/// with the smallest a (so a <= b).
inline PackingParams minimal_packing(std::uint64_t k) {
  if (k == 0) throw PreconditionError("minimal_packing: requires k >= 1");
  std::uint64_t best_a = 1, best_b = k;
  for (std::uint64_t a = 1;; ++a) {
    const std::uint64_t b = (k + a - 1) / a;
    if (b < a) break;  // remaining pairs are mirror images
    if (a + b < best_a + best_b) {
      best_a = a;
      best_b = b;
    }
  }
  return {static_cast<std::size_t>(best_a), static_cast<std::size_t>(best_b)};
}

/// Faithful nilrepresentation of dimension m + ceil(2 sqrt(n+1)).
inline Representation minimal_faithful_nilrep(std::size_t m, std::size_t n) {
  return pi_ab(m, n, minimal_packing(n + 1));
}

/// Faithful representation of dimension m + ceil(2 sqrt(n)); n = 0 is
/// covered by canonical_pi0 instead.
inline Representation minimal_faithful_rep(std::size_t m, std::size_t n) {
  if (n == 0)
    throw PreconditionError(
        "minimal_faithful_rep: n = 0 is not covered by the scalar family; use canonical_pi0(m) for h_m");
  return pi_tilde_ab(m, n, minimal_packing(n));
}

}  // namespace heisrep
