#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "trilocal/errors.hpp"
#include "trilocal/flags.hpp"
#include "trilocal/oracles.hpp"

using namespace trilocal;

TEST(RelativePosition, PermutationFlags) {
  for (int n = 1; n <= 4; ++n) {
    EmbeddingShape s(n, 1);
    for (const auto& w : all_elements(s)) {
      EXPECT_EQ(relative_position(Flag::standard(s), Flag::from_weyl(w)), w);
      EXPECT_EQ(intersection_dims(RationalMatrix::identity(n), permutation_matrix(w.part(0))),
                oracle::expected_intersection_dims(w.part(0)));
    }
  }
}

TEST(RelativePosition, JumpPatternMatchesReduction) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    auto s = testgen::shape(rng, 5, 2);
    auto f1 = testgen::flag(rng, s), f2 = testgen::flag(rng, s);
    auto w = relative_position(f1, f2);
    EXPECT_EQ(w, oracle::relative_position_by_reduction(f1, f2));
    auto g = testgen::frame(rng, s);
    EXPECT_EQ(relative_position(f1.translated(g), f2.translated(g)), w);
    // Swapping the flags inverts the position.
    EXPECT_EQ(relative_position(f2, f1), w.inverse());
  }
}

TEST(Flag, SubspaceEquality) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    auto s = testgen::shape(rng, 4, 2);
    auto f = testgen::flag(rng, s);
    // Right multiplication by an invertible upper triangular matrix keeps every F_i.
    std::vector<RationalMatrix> moved;
    for (const auto& m : f.blocks) {
      auto b = RationalMatrix::identity(m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.rows(); ++j) b(i, j) = random_small_rational(rng);
      moved.push_back(m * b);
    }
    EXPECT_TRUE(same_flag(f, Flag(moved)));
    EXPECT_EQ(relative_position(f, Flag(moved)), identity_element(s));
  }
  EmbeddingShape s(2, 1);
  EXPECT_FALSE(same_flag(Flag::standard(s), Flag::from_weyl(longest_element(s))));
}

TEST(RelativePosition, RejectsSingularFlag) {
  EmbeddingShape s(2, 1);
  Flag bad({RationalMatrix{{1, 1}, {1, 1}}});
  EXPECT_THROW(relative_position(bad, Flag::standard(s)), PreconditionError);
}

TEST(Cell, SupportAndDimension) {
  auto w = WeylElement::parse(EmbeddingShape(3, 1), "123");
  EXPECT_EQ(upper_support(w.part(0)).size(), 3u);
  EXPECT_TRUE(upper_support(Permutation::longest(3)).empty());
  for (int n = 1; n <= 4; ++n)
    for (const auto& v : all_elements(EmbeddingShape(n, 2)))
      EXPECT_EQ(cell_fiber_dimension(v), 2 * n * (n + 1) / 2 - v.length());
}

TEST(Cell, RejectsEntryOutsideSupport) {
  EmbeddingShape s(2, 1);
  auto w0 = longest_element(s);
  RationalMatrix u(2, 2);
  u(0, 1) = 1;
  EXPECT_THROW(make_cell_point({RationalMatrix::identity(2)}, w0, {{0, 0}}, {u}), SupportViolation);
}

TEST(Kappa, RelationOnRandomCellPoints) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = testgen::shape(rng, 4, 2);
    auto w = testgen::element(rng, s);
    auto pt = testgen::cell_point(rng, w, trial % 5 == 0);
    EXPECT_EQ(relative_position(pt.flag1, pt.flag2), w);
    EXPECT_EQ(kappa(pt, 2), adjoint_inverse_action(w, kappa(pt, 1)));
    auto cands = candidate_components(pt);
    EXPECT_NE(std::find(cands.begin(), cands.end(), w), cands.end());
  }
}

TEST(Kappa, RegularKappaSingleCandidate) {
  EmbeddingShape s(3, 1);
  auto w = WeylElement::parse(s, "213");
  auto pt = make_cell_point({RationalMatrix::identity(3)}, w, {{1, 2, 3}}, {RationalMatrix(3, 3)});
  auto cands = candidate_components(pt);
  ASSERT_EQ(cands.size(), 1u);
  EXPECT_EQ(cands[0], w);
}

TEST(Kappa, RejectsNonPreservingPsi) {
  LocalModelPoint pt;
  pt.flag1 = pt.flag2 = Flag::standard(EmbeddingShape(2, 1));
  pt.psi = {RationalMatrix{{0, 0}, {1, 0}}};
  EXPECT_THROW(kappa(pt, 1), InvariantViolation);
}

TEST(Roots, MatchAndCharPoly) {
  std::vector<Rational> a{1, 2, 3}, b{3, 1, 2};
  auto w = match_roots(a, b);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(b[i], a[w(i)]);
  EXPECT_THROW(match_roots({1, 1}, {1, 1}), PreconditionError);
  EXPECT_EQ(polynomial_from_roots({1, 2}).coeffs, (std::vector<Rational>{2, -3, 1}));
  auto n = RationalMatrix{{0, 1}, {0, 0}};
  auto cp = graded_char_poly(n, RationalMatrix::identity(2), {5, 7});
  EXPECT_EQ(cp, polynomial_from_roots({5, 7}));
}

TEST(Probe, RankTwoIsExact) {
  EmbeddingShape s(2, 1);
  for (const auto& w : all_elements(s))
    for (const auto& wp : lower_interval(w)) {
      auto r = probe_conjecture(w, wp, 10, 1);
      ASSERT_TRUE(r.exact_equality.has_value());
      EXPECT_TRUE(*r.exact_equality);
      EXPECT_EQ(r.found, 10);
    }
}

TEST(Probe, RankThreeCompletesAndIsSeeded) {
  EmbeddingShape s(3, 1);
  auto w = WeylElement::parse(s, "312"), wp = identity_element(s);
  auto a = probe_conjecture(w, wp, 20, 7), b = probe_conjecture(w, wp, 20, 7);
  EXPECT_EQ(a.found, b.found);
  EXPECT_EQ(a.found + a.not_found, 20);
  EXPECT_THROW(probe_conjecture(wp, w, 5, 1), PreconditionError);
  EXPECT_THROW(probe_conjecture(longest_element(EmbeddingShape(4, 1)), identity_element(EmbeddingShape(4, 1)), 1, 1),
               PreconditionError);
}
