#include "heisrep/acceptance.hpp"

#include <gtest/gtest.h>

using namespace heisrep;

namespace {

Representation zero_rep(const LieAlgebra& alg, std::size_t dim) {
  return {alg, dim, std::vector<RatMatrix>(alg.dim(), RatMatrix(dim, dim))};
}

LieAlgebra abelian(std::size_t n) { return build_heisenberg_abelian({0, n - 1}); }

// Non-nilpotent 2-dim algebra [e1, e2] = e2 with its faithful adjoint representation.
Representation affine_adjoint() {
  const LieAlgebra alg({"e1", "e2"}, std::vector<BracketEntry>{{0, 1, {{1, 1}}}});
  return {alg, 2, {RatMatrix{{0, 0}, {0, 1}}, RatMatrix{{0, 0}, {-1, 0}}}};
}

bool all_strictly_upper(const std::vector<RatMatrix>& mats) {
  for (const auto& m : mats)
    if (!is_strictly_upper_triangular(m)) return false;
  return true;
}

}  // namespace

TEST(IsHomomorphism, Examples) {
  EXPECT_TRUE(is_homomorphism(pi_ab(2, 4, PackingParams(2, 3))).pass);
  EXPECT_TRUE(is_homomorphism(zero_rep(build_heisenberg_abelian({2, 1}), 3)).pass);
  EXPECT_TRUE(is_homomorphism(affine_adjoint()).pass);

  for (std::size_t m = 1; m <= 3; ++m) {
    Representation r = canonical_pi0(m);
    const HeisenbergAbelianParams p{m, 0};
    r.matrices[p.z_index()] = mat_scale(r.matrices[p.z_index()], 2);
    const auto report = is_homomorphism(r);
    EXPECT_FALSE(report.pass);
    ASSERT_TRUE(report.failing_pair.has_value());
    EXPECT_EQ(*report.failing_pair, (std::pair<std::size_t, std::size_t>{p.x_index(1), p.y_index(1)}));
    // E_{1,m+2} - 2 E_{1,m+2}
    EXPECT_EQ(report.residual, mat_scale(RatMatrix::unit(m + 2, m + 2, 0, m + 1), -1));
  }
}

TEST(RepKernel, Examples) {
  const HeisenbergAbelianParams p{2, 4};
  const Representation r = pi_ab(2, 4, PackingParams(1, 3));
  const Subspace k = rep_kernel(r);
  const LieAlgebra& g = r.algebra;
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_TRUE(same_span(k, Subspace{g.dim(), {g.basis_vector(p.a_index(3)), g.basis_vector(p.a_index(4))}}));

  for (std::size_t m = 1; m <= 4; ++m) EXPECT_TRUE(rep_kernel(canonical_pi0(m)).is_zero());
  EXPECT_EQ(rep_kernel(zero_rep(abelian(3), 2)).dim(), 3u);
}

TEST(IsFaithful, Examples) {
  EXPECT_TRUE(is_faithful(pi_ab(2, 4, PackingParams(2, 3))));
  EXPECT_FALSE(is_faithful(pi_ab(2, 4, PackingParams(2, 2))));
  EXPECT_FALSE(is_faithful(pi_ab(2, 4, PackingParams(1, 3))));
  EXPECT_TRUE(is_faithful(Representation(abelian(1), 1, {RatMatrix{{1}}})));
  EXPECT_TRUE(is_faithful(pi_tilde_ab(1, 1, PackingParams(1, 1))));
}

TEST(IsFaithfulViaCenter, Examples) {
  EXPECT_TRUE(is_faithful_via_center(pi_ab(2, 4, PackingParams(2, 3))));
  EXPECT_FALSE(is_faithful_via_center(pi_ab(2, 4, PackingParams(1, 3))));
  EXPECT_FALSE(is_faithful_via_center(zero_rep(build_heisenberg_abelian({1, 0}), 3)));
}

TEST(IsFaithfulViaCenter, RefusesNonNilpotentAlgebras) {
  const Representation adj = affine_adjoint();
  EXPECT_TRUE(is_faithful(adj));
  EXPECT_THROW((void)is_faithful_via_center(adj), PreconditionError);
}

TEST(IsFaithfulViaCenter, AgreesWithDirectKernelOnRandomVariants) {
  Rng rng(99);
  for (int s = 0; s < 60; ++s) {
    const Representation rep = acceptance::random_center_variant(rng);
    ASSERT_TRUE(is_homomorphism(rep).pass);
    EXPECT_EQ(is_faithful(rep), is_faithful_via_center(rep));
  }
}

TEST(EngelFlag, CanonicalPi0) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const Representation r = canonical_pi0(m);
    const EngelFlag f = engel_flag(r);
    ASSERT_TRUE(f.success);
    EXPECT_EQ(f.basis.size(), m + 2);
    EXPECT_TRUE(all_strictly_upper(in_flag_basis(r, f)));
  }
}

TEST(EngelFlag, PiAbNeedsAtMostThreeStages) {
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 5; ++n)
      for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t b = 1; b <= 3; ++b) {
          const Representation r = pi_ab(m, n, PackingParams(a, b));
          const EngelFlag f = engel_flag(r);
          ASSERT_TRUE(f.success);
          EXPECT_LE(f.stage_dims.size(), 3u);
          EXPECT_EQ(f.stage_dims.back(), r.space_dim);
          EXPECT_TRUE(all_strictly_upper(in_flag_basis(r, f)));
        }
}

TEST(EngelFlag, FailsOnNonNilpotentImages) {
  const EngelFlag f = engel_flag(Representation(abelian(1), 1, {RatMatrix{{1}}}));
  EXPECT_FALSE(f.success);
  EXPECT_EQ(f.failed_stage, 0u);

  const Representation adj = affine_adjoint();
  EXPECT_FALSE(engel_flag(adj).success);

  Representation broken = canonical_pi0(1);
  broken.matrices[2] = RatMatrix(3, 3);
  EXPECT_THROW((void)engel_flag(broken), PreconditionError);
}

TEST(IsNilrepresentation, Examples) {
  EXPECT_TRUE(is_nilrepresentation(pi_ab(2, 4, PackingParams(2, 3))));
  EXPECT_TRUE(is_nilrepresentation(zero_rep(build_heisenberg_abelian({1, 2}), 4)));
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_FALSE(is_nilrepresentation(pi_tilde_ab(1, n, PackingParams(1, 2))));
}

// Whenever the flag exists, random elements act nilpotently; whenever it
// does not, some basis or random-element image is not nilpotent.
TEST(EngelFlag, ConsistentWithElementwiseNilpotency) {
  Rng rng(4242);
  for (int s = 0; s < 40; ++s) {
    const Representation rep = acceptance::random_center_variant(rng);
    const EngelFlag f = engel_flag(rep);
    if (f.success) {
      for (int e = 0; e < 50; ++e)
        EXPECT_TRUE(is_nilpotent_matrix(rep.image(random_vector(rng, rep.algebra.dim()))));
    } else {
      bool witness = false;
      for (const auto& m : rep.matrices) witness = witness || !is_nilpotent_matrix(m);
      for (int e = 0; e < 50 && !witness; ++e)
        witness = !is_nilpotent_matrix(rep.image(random_vector(rng, rep.algebra.dim())));
      EXPECT_TRUE(witness) << "sample " << s;
    }
  }
}

TEST(RepKernel, RankNullityAndFamilyKernelDimension) {
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 6; ++n)
      for (std::size_t a = 1; a <= n + 2; ++a)
        for (std::size_t b = 1; b <= n + 2; ++b) {
          const Representation r = pi_ab(m, n, PackingParams(a, b));
          const Subspace k = rep_kernel(r);
          EXPECT_EQ(k.dim() + rank(vectorized_images(r)), r.algebra.dim());
          EXPECT_EQ(k.dim(), n + 1 > a * b ? n + 1 - a * b : 0u);
          if (n >= 1) {
            EXPECT_EQ(is_faithful(pi_tilde_ab(m, n, PackingParams(a, b))), a * b >= n);
          }
        }
}
