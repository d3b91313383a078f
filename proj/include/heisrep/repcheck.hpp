#pragma once

// Checks on explicit representations: homomorphism property, kernel and
// faithfulness (directly and through the center of a nilpotent algebra), and
// nilrepresentation-hood via an Engel flag.

#include "heisrep/construct.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace heisrep {

struct HomomorphismReport {
  bool pass = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  RatMatrix residual;  // [M_i, M_j] - sum_k c_ij^k M_k at the failing pair
};

/// Checks [M_i, M_j] = sum_k c_ij^k M_k for every basis pair i < j.
inline HomomorphismReport is_homomorphism(const Representation& rep) {
  const auto& alg = rep.algebra;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      RatMatrix residual = commutator(rep.matrices[i], rep.matrices[j]);
      for (const auto& [k, c] : alg.structure(i, j)) mat_axpy(residual, -c, rep.matrices[k]);
      if (!residual.is_zero()) return {false, std::pair{i, j}, std::move(residual)};
    }
  return {};
}

/// Columns are the row-major vectorized basis images.
inline RatMatrix vectorized_images(const Representation& rep) {
  const std::size_t n2 = rep.space_dim * rep.space_dim;
  RatMatrix out(n2, rep.algebra.dim());
  for (std::size_t i = 0; i < rep.algebra.dim(); ++i) {
    const auto& e = rep.matrices[i].entries();
    for (std::size_t r = 0; r < n2; ++r)
      if (!e[r].is_zero()) out(r, i) = e[r];
  }
  return out;
}

/// ker pi as a subspace of the algebra.
inline Subspace rep_kernel(const Representation& rep) {
  return {rep.algebra.dim(), kernel_basis(vectorized_images(rep))};
}

inline bool is_faithful(const Representation& rep) { return rep_kernel(rep).is_zero(); }

/// Faithfulness decided on the center alone. Valid only for nilpotent
/// algebras; anything else raises PreconditionError.
inline bool is_faithful_via_center(const Representation& rep) {
  if (!nilpotency_class(rep.algebra))
    throw PreconditionError("is_faithful_via_center: the algebra is not nilpotent");
  const Subspace z = center(rep.algebra);
  const std::size_t n2 = rep.space_dim * rep.space_dim;
  RatMatrix images(n2, z.dim());
  for (std::size_t c = 0; c < z.dim(); ++c) {
    const RatMatrix m = rep.image(z.basis[c]);
    for (std::size_t r = 0; r < n2; ++r) images(r, c) = m.entries()[r];
  }
  return rank(images) == z.dim();
}

struct EngelFlag {
  bool success = false;
  /// On success: an ordered basis of the space (as coordinate vectors) in
  /// which every basis image is strictly upper triangular.
  std::vector<Vector> basis;
  /// Dimension of each flag term W_1 < W_2 < ... reached.
  std::vector<std::size_t> stage_dims;
  /// On failure: index of the stage whose preimage did not grow.
  std::optional<std::size_t> failed_stage;
};

/// Builds W_0 = 0, W_{k+1} = {v : M_i v in W_k for all i} until W_k is the
/// whole space (success) or stops growing (failure). Only basis images are
/// used: the common preimage of a spanning set equals that of its span.
inline EngelFlag engel_flag(const Representation& rep) {
  if (!is_homomorphism(rep).pass)
    throw PreconditionError("engel_flag: input is not a Lie algebra homomorphism");
  const std::size_t n = rep.space_dim;
  EngelFlag flag;
  std::vector<Vector> current;  // basis of W_k
  while (current.size() < n) {
    // Rows of `annihilator` cut out W_k: v in W_k iff annihilator * v = 0.
    RatMatrix annihilator = RatMatrix::identity(n);
    if (!current.empty()) {
      const auto ann = kernel_basis(RatMatrix::from_rows(current, n));
      annihilator = RatMatrix::from_rows(ann, n);
    }
    RatMatrix system(annihilator.rows() * rep.matrices.size(), n);
    for (std::size_t i = 0; i < rep.matrices.size(); ++i) {
      const RatMatrix block = mat_mul(annihilator, rep.matrices[i]);
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) system(i * annihilator.rows() + r, c) = block(r, c);
    }
    const auto preimage = kernel_basis(system);
    if (preimage.size() <= current.size()) {
      flag.failed_stage = flag.stage_dims.size();
      return flag;
    }
    // Extend the basis of W_k by preimage vectors outside it.
    for (const auto& v : preimage) {
      std::vector<Vector> trial = current;
      trial.push_back(v);
      if (rank(RatMatrix::from_rows(trial, n)) == trial.size()) current = std::move(trial);
    }
    flag.stage_dims.push_back(current.size());
  }
  flag.success = true;
  flag.basis = std::move(current);
  return flag;
}

inline bool is_nilrepresentation(const Representation& rep) { return engel_flag(rep).success; }

/// Conjugates every image into the flag basis: P^{-1} M P with P's columns the basis.
inline std::vector<RatMatrix> in_flag_basis(const Representation& rep, const EngelFlag& flag) {
  const RatMatrix p = transpose(RatMatrix::from_rows(flag.basis, rep.space_dim));
  const RatMatrix p_inv = inverse(p);
  std::vector<RatMatrix> out;
  out.reserve(rep.matrices.size());
  for (const auto& m : rep.matrices) out.push_back(mat_mul(p_inv, mat_mul(m, p)));
  return out;
}

}  // namespace heisrep
