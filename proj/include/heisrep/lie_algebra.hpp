#pragma once

// Finite-dimensional Lie algebras given by structure constants on a labeled
// basis. Only nonzero brackets [e_i, e_j] with i < j are stored; the rest
// follow from antisymmetry.

#include "heisrep/matrix.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace heisrep {

/// Coordinates of an algebra element in the algebra's basis.
using ElementCoords = Vector;

/// Sparse coordinate vector: basis index -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Rational>;

struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  SparseVector coeffs;  // expansion of [e_i, e_j]
};

class LieAlgebra {
public:
  LieAlgebra() = default;

  /// Throws std::invalid_argument on an out-of-range index, i >= j, or a repeated pair.
  LieAlgebra(std::vector<std::string> labels, std::span<const BracketEntry> brackets)
      : labels_(std::move(labels)) {
    for (const auto& b : brackets) {
      if (b.i >= b.j || b.j >= dim())
        throw std::invalid_argument("LieAlgebra: bracket pair (" + std::to_string(b.i) + ", " +
                                    std::to_string(b.j) + ") must satisfy i < j < dim");
      SparseVector clean;
      for (const auto& [k, c] : b.coeffs) {
        if (k >= dim()) throw std::invalid_argument("LieAlgebra: coefficient index out of range");
        if (!c.is_zero()) clean.emplace(k, c);
      }
      if (brackets_.contains({b.i, b.j})) throw std::invalid_argument("LieAlgebra: repeated bracket pair");
      if (!clean.empty()) brackets_.emplace(std::pair{b.i, b.j}, std::move(clean));
    }
  }

  [[nodiscard]] std::size_t dim() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::map<std::pair<std::size_t, std::size_t>, SparseVector>& nonzero_brackets() const {
    return brackets_;
  }

  /// [e_i, e_j] for any ordered pair.
  [[nodiscard]] SparseVector structure(std::size_t i, std::size_t j) const {
    if (i == j) return {};
    const bool flip = i > j;
    auto it = brackets_.find(flip ? std::pair{j, i} : std::pair{i, j});
    if (it == brackets_.end()) return {};
    if (!flip) return it->second;
    SparseVector neg;
    for (const auto& [k, c] : it->second) neg.emplace(k, -c);
    return neg;
  }

  [[nodiscard]] ElementCoords basis_vector(std::size_t i) const {
    ElementCoords v(dim());
    v.at(i) = 1;
    return v;
  }

  [[nodiscard]] ElementCoords zero_vector() const { return ElementCoords(dim()); }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
  std::vector<std::string> labels_;
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> brackets_;
};

/// Linear subspace of k^ambient_dim with a linearly independent basis.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<ElementCoords> basis;

  [[nodiscard]] std::size_t dim() const { return basis.size(); }
  [[nodiscard]] bool is_zero() const { return basis.empty(); }

  /// Reduces an arbitrary spanning set to a basis (nonzero rows of the RREF).
  static Subspace span_of(std::size_t ambient_dim, std::span<const ElementCoords> vectors) {
    Subspace s{ambient_dim, {}};
    if (vectors.empty()) return s;
    const RowEchelon e = rref(RatMatrix::from_rows(vectors, ambient_dim));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) s.basis.push_back(e.reduced.row(i));
    return s;
  }

  static Subspace whole(std::size_t ambient_dim) {
    Subspace s{ambient_dim, {}};
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      ElementCoords v(ambient_dim);
      v[i] = 1;
      s.basis.push_back(std::move(v));
    }
    return s;
  }
};

inline std::size_t rank_of_vectors(std::size_t ambient_dim, std::span<const ElementCoords> vectors) {
  if (vectors.empty()) return 0;
  return rank(RatMatrix::from_rows(vectors, ambient_dim));
}

inline bool contains(const Subspace& s, const ElementCoords& v) {
  std::vector<ElementCoords> stacked = s.basis;
  stacked.push_back(v);
  return rank_of_vectors(s.ambient_dim, stacked) == s.dim();
}

/// Equality as subspaces, decided by ranks rather than by basis comparison.
inline bool same_span(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim) return false;
  std::vector<ElementCoords> stacked = a.basis;
  stacked.insert(stacked.end(), b.basis.begin(), b.basis.end());
  const std::size_t r = rank_of_vectors(a.ambient_dim, stacked);
  return r == rank_of_vectors(a.ambient_dim, a.basis) && r == rank_of_vectors(b.ambient_dim, b.basis);
}

inline ElementCoords bracket(const LieAlgebra& alg, std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != alg.dim() || y.size() != alg.dim())
    throw ShapeError("bracket: coordinate length does not match algebra dimension " + std::to_string(alg.dim()));
  ElementCoords out(alg.dim());
  for (const auto& [pair, coeffs] : alg.nonzero_brackets()) {
    const auto [i, j] = pair;
    const Rational w = x[i] * y[j] - x[j] * y[i];
    if (w.is_zero()) continue;
    for (const auto& [k, c] : coeffs) out[k] += w * c;
  }
  return out;
}

struct JacobiReport {
  bool pass = true;
  std::optional<std::array<std::size_t, 3>> failing_triple;
  ElementCoords residual;
};

inline JacobiReport check_jacobi(const LieAlgebra& alg) {
  const std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const auto ei = alg.basis_vector(i), ej = alg.basis_vector(j), ek = alg.basis_vector(k);
        ElementCoords sum = bracket(alg, bracket(alg, ei, ej), ek);
        const auto t2 = bracket(alg, bracket(alg, ej, ek), ei);
        const auto t3 = bracket(alg, bracket(alg, ek, ei), ej);
        bool zero = true;
        for (std::size_t r = 0; r < d; ++r) {
          sum[r] += t2[r] + t3[r];
          zero = zero && sum[r].is_zero();
        }
        if (!zero) return {false, std::array{i, j, k}, std::move(sum)};
      }
  return {};
}

/// Center {x : [x, e_j] = 0 for all j}, as the null space of the stacked adjoint system.
inline Subspace center(const LieAlgebra& alg) {
  const std::size_t d = alg.dim();
  // Row (j, k), column i: coefficient of e_k in [e_i, e_j].
  RatMatrix system(d * d, d);
  for (const auto& [pair, coeffs] : alg.nonzero_brackets()) {
    const auto [i, j] = pair;
    for (const auto& [k, c] : coeffs) {
      system(j * d + k, i) = c;
      system(i * d + k, j) = -c;
    }
  }
  return {d, kernel_basis(system)};
}

/// g, [g,g], [[g,g],g], ... ending at the zero subspace or at the first repeated term.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& alg) {
  const std::size_t d = alg.dim();
  std::vector<Subspace> series{Subspace::whole(d)};
  while (!series.back().is_zero()) {
    std::vector<ElementCoords> spanning;
    for (const auto& u : series.back().basis)
      for (std::size_t j = 0; j < d; ++j) spanning.push_back(bracket(alg, u, alg.basis_vector(j)));
    Subspace next = Subspace::span_of(d, spanning);
    // Terms are nested, so equal dimension means the series has stabilized.
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

/// Number of steps for the lower central series to reach zero; nullopt if it
/// stabilizes at a nonzero subspace.
inline std::optional<std::size_t> nilpotency_class(const LieAlgebra& alg) {
  const auto series = lower_central_series(alg);
  if (!series.back().is_zero()) return std::nullopt;
  return series.size() - 1;
}

}  // namespace heisrep
