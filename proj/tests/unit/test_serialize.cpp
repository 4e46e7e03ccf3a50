#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "trilocal/errors.hpp"
#include "trilocal/serialize.hpp"

using namespace trilocal;

TEST(Json, PermutationsAreOneBased) {
  auto w = WeylElement::parse(EmbeddingShape(3, 2), "312.123");
  EXPECT_EQ(to_json(w).dump(), "[[3,1,2],[1,2,3]]");
  EXPECT_EQ(weyl_from_json(to_json(w), w.shape()), w);
  EXPECT_EQ(weyl_from_json(Json("312.123"), w.shape()), w);
  EXPECT_EQ(weyl_from_json(Json::parse("[3,1,2]"), EmbeddingShape(3, 1)).to_string(), "312");
  EXPECT_THROW(permutation_from_json(Json::parse("[0,1]")), ParseError);
}

TEST(Json, RationalsAndMatrices) {
  EXPECT_EQ(to_json(Rational(1, 2)).dump(), "\"1/2\"");
  EXPECT_EQ(rational_from_json(Json(3)), 3);
  EXPECT_EQ(rational_from_json(Json("-2/6")), Rational(-1, 3));
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = testgen::matrix(rng, 1 + trial % 4, 1 + trial % 3);
    EXPECT_EQ(matrix_from_json(to_json(m)), m);
  }
  EXPECT_THROW(matrix_from_json(Json::parse("[[1],[1,2]]")), Error);
}

TEST(Json, FlagRoundTrip) {
  std::mt19937_64 rng(62);
  auto f = testgen::flag(rng, EmbeddingShape(3, 2));
  auto g = flag_from_json(to_json(f));
  ASSERT_EQ(g.blocks.size(), 2u);
  EXPECT_EQ(g.blocks[1], f.blocks[1]);
}

TEST(Json, Param) {
  auto j = Json::parse(R"({"n": 2, "sigma": 1, "h": [[3, 0]], "phi": ["2", "7/3"], "q": 5})");
  auto p = param_from_json(j);
  EXPECT_EQ(p.phi[1], Rational(7, 3));
  EXPECT_EQ(p.h.rows[0][1], 0);
  EXPECT_THROW(param_from_json(Json::parse(R"({"n": 2})")), Error);
}

TEST(Json, AMatrix) {
  EmbeddingShape s(2, 1);
  auto a = amatrix_from_json(Json::parse(R"({"entries": [{"w": "21", "wp": "12", "value": 2}]})"), s);
  EXPECT_EQ(a.get(WeylElement::parse(s, "21"), WeylElement::parse(s, "12")), 2);
  EXPECT_FALSE(a.is_default());
  EXPECT_THROW(amatrix_from_json(Json::parse(R"({"entries": [{"w": "12", "wp": "21", "value": 1}]})"), s),
               PreconditionError);
}

TEST(Json, Cycle) {
  EmbeddingShape s(2, 1);
  auto c = Cycle::basis(WeylElement::parse(s, "21"), 3);
  EXPECT_EQ(to_json(c).dump(), R"({"21":3})");
}
