#include "heisrep/acceptance.hpp"

#include <gtest/gtest.h>

using namespace heisrep;

TEST(Json, AlgebraFormat) {
  const json j = to_json(build_heisenberg_abelian({2, 1}));
  EXPECT_EQ(j["dim"], 6);
  EXPECT_EQ(j["basis"], json({"X_1", "X_2", "Y_1", "Y_2", "Z", "A_1"}));
  ASSERT_EQ(j["brackets"].size(), 2u);
  EXPECT_EQ(j["brackets"][0], json({{"i", 0}, {"j", 2}, {"coeffs", {{"4", "1"}}}}));
  EXPECT_EQ(algebra_from_json(j), build_heisenberg_abelian({2, 1}));
}

TEST(Json, RepresentationRoundTripIsBitExact) {
  Rng rng(17);
  for (int s = 0; s < 25; ++s) {
    const Representation rep = acceptance::random_center_variant(rng);
    const std::string text = to_json(rep).dump();
    const Representation back = representation_from_string(text);
    EXPECT_EQ(back, rep);
    EXPECT_EQ(to_json(back).dump(), text);
  }
}

TEST(Json, EntriesAreCanonicalStrings) {
  Representation rep = pi_ab(1, 1, PackingParams(1, 2));
  rep.matrices[0] = mat_scale(rep.matrices[0], Rational(-6, 4));
  const json j = to_json(rep);
  EXPECT_EQ(j["space_dim"], 4);
  EXPECT_EQ(j["matrices"][0][0][1], "-3/2");
  EXPECT_EQ(j["matrices"][0][0][0], "0");
}

TEST(Json, RejectsMalformedInput) {
  const std::string good = to_json(pi_ab(1, 1, PackingParams(1, 2))).dump();
  EXPECT_NO_THROW(representation_from_string(good));
  EXPECT_THROW(representation_from_string(good.substr(0, good.size() / 2)), ParseError);
  EXPECT_THROW(representation_from_string("[]"), ParseError);

  json j = json::parse(good);
  j["space_dim"] = 5;
  EXPECT_THROW(representation_from_string(j.dump()), ParseError);

  j = json::parse(good);
  j["matrices"][0][0][0] = "1/0";
  EXPECT_THROW(representation_from_string(j.dump()), ParseError);

  j = json::parse(good);
  j["matrices"][0][0][0] = 3;
  EXPECT_THROW(representation_from_string(j.dump()), ParseError);

  j = json::parse(good);
  j["algebra"]["brackets"][0]["i"] = 2;
  EXPECT_THROW(representation_from_string(j.dump()), ParseError);

  j = json::parse(good);
  j["algebra"]["brackets"][0]["coeffs"] = {{"x", "1"}};
  EXPECT_THROW(representation_from_string(j.dump()), ParseError);

  j = json::parse(good);
  j["matrices"].erase(0);
  EXPECT_THROW(representation_from_string(j.dump()), ParseError);
}

TEST(Symbolic, ScalarVariantShowsDiagonal) {
  const auto grid = symbolic_grid(pi_tilde_ab(1, 2, PackingParams(1, 2)));
  ASSERT_EQ(grid.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(grid[i][i], "a_2");
  EXPECT_EQ(grid[0][1], "x_1");
  EXPECT_EQ(grid[0][2], "z");
  EXPECT_EQ(grid[0][3], "a_1");
  EXPECT_EQ(grid[1][2], "y_1");
}

TEST(Symbolic, CoefficientsAndSums) {
  const LieAlgebra alg = build_heisenberg_abelian({0, 1});
  const Representation rep(alg, 2, {RatMatrix{{0, 2}, {0, 0}}, RatMatrix{{0, -1}, {0, 0}}});
  EXPECT_EQ(symbolic_grid(rep)[0][1], "2*z-a_1");
}

TEST(Latex, ContainsSymbolicAndPerBasisMatrices) {
  const std::string tex = latex(pi_ab(2, 10, PackingParams(3, 4)));
  EXPECT_NE(tex.find("\\begin{pmatrix}"), std::string::npos);
  EXPECT_NE(tex.find("x_{1}"), std::string::npos);
  EXPECT_NE(tex.find("a_{10}"), std::string::npos);
  EXPECT_NE(tex.find("\\pi(A_{10})"), std::string::npos);

  Representation r = canonical_pi0(1);
  r.matrices[0] = mat_scale(r.matrices[0], Rational(-3, 7));
  EXPECT_NE(latex(r).find("-\\frac{3}{7}"), std::string::npos);
}

TEST(Reports, JsonShape) {
  EXPECT_EQ(to_json(CheckReport{"hom", true, nullptr}), json({{"check", "hom"}, {"pass", true}}));
  const json j = to_json(CheckReport{"nil", false, json{{"failed_stage", 0}}});
  EXPECT_EQ(j["witness"]["failed_stage"], 0);
  EXPECT_FALSE(j["pass"]);
}
