#include "heisrep/construct.hpp"
#include "heisrep/random.hpp"

#include <gtest/gtest.h>

using namespace heisrep;

namespace {

LieAlgebra algebra3(SparseVector xy, SparseVector xz, SparseVector yz) {
  const std::vector<BracketEntry> b{{0, 1, std::move(xy)}, {0, 2, std::move(xz)}, {1, 2, std::move(yz)}};
  return {{"X_1", "Y_1", "Z"}, b};
}

// Jacobi holds iff ad is a Lie homomorphism: ad([e_i, e_j]) = [ad e_i, ad e_j].
// Built from the structure constants as matrices, independent of check_jacobi.
bool jacobi_via_adjoint(const LieAlgebra& alg) {
  const std::size_t d = alg.dim();
  std::vector<RatMatrix> ad(d, RatMatrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : alg.structure(i, j)) ad[i](k, j) = c;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      RatMatrix lhs(d, d);
      for (const auto& [k, c] : alg.structure(i, j)) mat_axpy(lhs, c, ad[k]);
      if (lhs != commutator(ad[i], ad[j])) return false;
    }
  return true;
}

}  // namespace

TEST(Bracket, HeisenbergRelations) {
  const HeisenbergAbelianParams p11{1, 1};
  const LieAlgebra h11 = build_heisenberg_abelian(p11);
  EXPECT_EQ(bracket(h11, h11.basis_vector(p11.x_index(1)), h11.basis_vector(p11.y_index(1))),
            h11.basis_vector(p11.z_index()));

  const HeisenbergAbelianParams p21{2, 1};
  const LieAlgebra h21 = build_heisenberg_abelian(p21);
  ElementCoords x = h21.zero_vector();
  x[p21.x_index(1)] = 1;
  x[p21.x_index(2)] = 1;
  EXPECT_EQ(bracket(h21, x, h21.basis_vector(p21.y_index(2))), h21.basis_vector(p21.z_index()));
  EXPECT_THROW(bracket(h21, x, ElementCoords(3)), ShapeError);
}

TEST(Bracket, AntisymmetryOnRandomElements) {
  Rng rng(5);
  const std::vector<LieAlgebra> algebras{build_heisenberg_abelian({1, 0}), build_heisenberg_abelian({3, 2}),
                                         algebra3({{2, 1}}, {{1, 1}}, {{2, 1}})};
  for (const auto& alg : algebras)
    for (int s = 0; s < 100; ++s) {
      const auto x = random_vector(rng, alg.dim()), y = random_vector(rng, alg.dim());
      ElementCoords neg = bracket(alg, y, x);
      for (auto& v : neg) v = -v;
      EXPECT_EQ(bracket(alg, x, y), neg);
      for (const auto& v : bracket(alg, x, x)) EXPECT_TRUE(v.is_zero());
    }
}

TEST(Jacobi, FamilyAndAbelianPass) {
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 3; ++n) {
      const LieAlgebra alg = build_heisenberg_abelian({m, n});
      EXPECT_TRUE(check_jacobi(alg).pass);
      EXPECT_TRUE(jacobi_via_adjoint(alg));
    }
  const LieAlgebra abelian({"A_1", "A_2", "A_3", "A_4"}, std::vector<BracketEntry>{});
  EXPECT_TRUE(check_jacobi(abelian).pass);
}

TEST(Jacobi, TamperedAlgebras) {
  // [X,Y] = Z, [X,Z] = Y, [Y,Z] = 0 is a genuine Lie algebra (ad X swaps Y and Z
  // on an abelian ideal), so both routes accept it.
  const LieAlgebra swap = algebra3({{2, 1}}, {{1, 1}}, {});
  EXPECT_TRUE(jacobi_via_adjoint(swap));
  EXPECT_TRUE(check_jacobi(swap).pass);

  // Adding [Y,Z] = Z breaks it: the cyclic sum at (X, Y, Z) is -Y.
  const LieAlgebra broken = algebra3({{2, 1}}, {{1, 1}}, {{2, 1}});
  EXPECT_FALSE(jacobi_via_adjoint(broken));
  const JacobiReport r = check_jacobi(broken);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.failing_triple.has_value());
  EXPECT_EQ(*r.failing_triple, (std::array<std::size_t, 3>{0, 1, 2}));
  EXPECT_EQ(r.residual, (ElementCoords{0, -1, 0}));
}

TEST(Jacobi, AgreesWithAdjointOracleOnRandomStructureConstants) {
  Rng rng(9);
  for (int s = 0; s < 40; ++s) {
    std::vector<BracketEntry> b;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        SparseVector c;
        for (std::size_t k = 0; k < 3; ++k)
          if (random_index(rng, 0, 2) == 0) c[k] = random_rational(rng);
        b.push_back({i, j, c});
      }
    const LieAlgebra alg({"e1", "e2", "e3"}, b);
    EXPECT_EQ(check_jacobi(alg).pass, jacobi_via_adjoint(alg));
  }
}

TEST(LieAlgebraType, RejectsMalformedBrackets) {
  const std::vector<std::string> labels{"a", "b"};
  EXPECT_THROW(LieAlgebra(labels, std::vector<BracketEntry>{{1, 0, {{0, 1}}}}), std::invalid_argument);
  EXPECT_THROW(LieAlgebra(labels, std::vector<BracketEntry>{{0, 2, {{0, 1}}}}), std::invalid_argument);
  EXPECT_THROW(LieAlgebra(labels, std::vector<BracketEntry>{{0, 1, {{5, 1}}}}), std::invalid_argument);
  EXPECT_THROW(LieAlgebra(labels, std::vector<BracketEntry>{{0, 1, {{0, 1}}}, {0, 1, {{1, 1}}}}),
               std::invalid_argument);
  // Zero coefficients are not stored.
  const LieAlgebra alg(labels, std::vector<BracketEntry>{{0, 1, {{0, 0}}}});
  EXPECT_TRUE(alg.nonzero_brackets().empty());
}

TEST(Center, Examples) {
  for (std::size_t m = 1; m <= 3; ++m) {
    const HeisenbergAbelianParams p{m, 0};
    const LieAlgebra h = build_heisenberg_abelian(p);
    const Subspace z = center(h);
    EXPECT_EQ(z.dim(), 1u);
    EXPECT_TRUE(same_span(z, Subspace{h.dim(), {h.basis_vector(p.z_index())}}));
  }
  const LieAlgebra abelian({"A_1", "A_2", "A_3"}, std::vector<BracketEntry>{});
  EXPECT_EQ(center(abelian).dim(), 3u);

  const HeisenbergAbelianParams p{2, 4};
  const LieAlgebra g = build_heisenberg_abelian(p);
  Subspace expected{g.dim(), {g.basis_vector(p.z_index())}};
  for (std::size_t r = 1; r <= 4; ++r) expected.basis.push_back(g.basis_vector(p.a_index(r)));
  EXPECT_TRUE(same_span(center(g), expected));
}

TEST(Center, DimensionOverFamily) {
  for (std::size_t m = 0; m <= 6; ++m)
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(center(build_heisenberg_abelian({m, n})).dim(), n + 1);
}

TEST(Subspace, SameSpanIgnoresBasisChoice) {
  const Subspace a{3, {{1, 0, 0}, {0, 1, 0}}};
  const Subspace b{3, {{1, 1, 0}, {1, -1, 0}}};
  const Subspace c{3, {{1, 0, 0}, {0, 0, 1}}};
  EXPECT_TRUE(same_span(a, b));
  EXPECT_FALSE(same_span(a, c));
  EXPECT_TRUE(contains(a, ElementCoords{3, 5, 0}));
  EXPECT_FALSE(contains(a, ElementCoords{0, 0, 1}));
  EXPECT_EQ(Subspace::span_of(3, std::vector<ElementCoords>{{1, 2, 3}, {2, 4, 6}}).dim(), 1u);
}

TEST(LowerCentralSeries, Examples) {
  const LieAlgebra abelian({"A_1", "A_2"}, std::vector<BracketEntry>{});
  EXPECT_EQ(nilpotency_class(abelian), 1u);

  const HeisenbergAbelianParams p{2, 3};
  const LieAlgebra g = build_heisenberg_abelian(p);
  const auto series = lower_central_series(g);
  ASSERT_EQ(series.size(), 3u);
  EXPECT_TRUE(same_span(series[1], Subspace{g.dim(), {g.basis_vector(p.z_index())}}));
  EXPECT_TRUE(series[2].is_zero());
  EXPECT_EQ(nilpotency_class(g), 2u);

  // [e_1, e_2] = e_2 stabilizes at span{e_2}.
  const LieAlgebra affine({"e1", "e2"}, std::vector<BracketEntry>{{0, 1, {{1, 1}}}});
  const auto s2 = lower_central_series(affine);
  EXPECT_EQ(s2.back().dim(), 1u);
  EXPECT_FALSE(nilpotency_class(affine).has_value());
}

TEST(LowerCentralSeries, ClassOverFamily) {
  for (std::size_t m = 0; m <= 6; ++m)
    for (std::size_t n = 0; n <= 10; ++n)
      EXPECT_EQ(nilpotency_class(build_heisenberg_abelian({m, n})), m >= 1 ? 2u : 1u);
}
