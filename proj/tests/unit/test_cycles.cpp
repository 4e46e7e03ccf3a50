#include <gtest/gtest.h>

#include "trilocal/cartan.hpp"
#include "trilocal/cycles.hpp"
#include "trilocal/errors.hpp"
#include "trilocal/kl.hpp"

using namespace trilocal;

namespace {
WeylElement el(int n, const char* s) { return WeylElement::parse(EmbeddingShape(n, 1), s); }
}  // namespace

TEST(Cycle, Arithmetic) {
  auto a = Cycle::basis(el(2, "12"), 2) + Cycle::basis(el(2, "21"));
  auto b = a - Cycle::basis(el(2, "12"), 2);
  EXPECT_EQ(b, Cycle::basis(el(2, "21")));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.scaled(3).coeff(el(2, "12")), 6);
  EXPECT_TRUE(a.is_effective());
  EXPECT_FALSE(b.scaled(-1).is_effective());
  EXPECT_EQ(a.localized(el(2, "21")), Cycle::basis(el(2, "21")));
  Cycle mixed = Cycle::basis(el(2, "12"));
  EXPECT_THROW(mixed.add(el(3, "123"), 1), ShapeMismatch);
}

TEST(AMatrix, Validation) {
  EmbeddingShape s(3, 1);
  AMatrix a(s);
  EXPECT_TRUE(a.is_default());
  EXPECT_THROW(a.set(el(3, "213"), el(3, "213"), 2), PreconditionError);
  EXPECT_THROW(a.set(el(3, "213"), el(3, "132"), 1), PreconditionError);
  a.set(el(3, "321"), el(3, "123"), 2);
  EXPECT_FALSE(a.is_default());
  auto c = simple_cycle(el(3, "321"), a);
  EXPECT_EQ(c.coeff(el(3, "123")), 2);
  EXPECT_EQ(c.coeff(el(3, "321")), 1);
}

TEST(AMatrix, GuardAboveThreshold) {
  EmbeddingShape s(8, 1);
  AMatrix a(s);
  EXPECT_THROW(simple_cycle(identity_element(s), a), AMatrixGuard);
  a.mark_user_supplied();
  EXPECT_NO_THROW(simple_cycle(identity_element(s), a));
}

TEST(FiberCycle, IdentityRegime) {
  auto w0 = el(3, "321");
  EXPECT_EQ(fiber_cycle(w0, w0, AMatrix(w0.shape())), Cycle::basis(w0));
  // At the most degenerate point every component through it appears once.
  auto c = fiber_cycle(w0, el(3, "123"), AMatrix(w0.shape()));
  EXPECT_EQ(c.terms().size(), 6u);
  for (const auto& [v, k] : c.terms()) EXPECT_EQ(k, 1);
  auto big = fiber_cycle(el(4, "4231"), el(4, "1234"), AMatrix(EmbeddingShape(4, 1)));
  EXPECT_EQ(big.coeff(el(4, "1234")), verma_multiplicity(el(4, "4231"), el(4, "1234")));
}

TEST(FiberCycle, BreuilMezardResums) {
  for (int n = 1; n <= 4; ++n) {
    EmbeddingShape s(n, 1);
    AMatrix a(s);
    for (const auto& w : all_elements(s))
      for (const auto& wx : lower_interval(w)) {
        auto bm = breuil_mezard_decomposition(w, wx, a);
        Cycle total;
        for (const auto& [v, t] : bm) total = total + t.cycle.scaled(t.multiplicity);
        auto fc = fiber_cycle(w, wx, a);
        EXPECT_EQ(total, fc);
        EXPECT_TRUE(fc.is_effective());
        for (const auto& v : bruhat_interval(wx, w)) EXPECT_GT(fc.coeff(v), 0);
      }
  }
}

TEST(FiberCycle, CustomAMatrix) {
  EmbeddingShape s(3, 1);
  AMatrix a(s);
  a.set(el(3, "321"), el(3, "231"), 1);
  auto bm = breuil_mezard_decomposition(el(3, "321"), el(3, "123"), a);
  EXPECT_EQ(bm.at(el(3, "321")).cycle.coeff(el(3, "231")), 1);
}

TEST(Steinberg, Basis) {
  EmbeddingShape s(3, 2);
  auto b = steinberg_basis(s);
  EXPECT_EQ(b.size(), 36u);
  for (const auto& c : b) EXPECT_EQ(c.dimension, dim_group(s) - dim_torus(s));
  auto m = verma_change_of_basis(EmbeddingShape(3, 1));
  for (std::size_t i = 0; i < m.size(); ++i) {
    EXPECT_EQ(m[i][i], 1);
    for (std::size_t j = i + 1; j < m.size(); ++j) EXPECT_EQ(m[i][j], 0);
  }
}

TEST(Replay, SmallGroupsSucceed) {
  for (auto s : {EmbeddingShape(2, 1), EmbeddingShape(3, 1), EmbeddingShape(2, 2)}) {
    for (const auto& wy : all_elements(s))
      for (long long m : {1LL, 3LL}) {
        auto r = replay_companion_induction(wy, m, AMatrix(s));
        ASSERT_TRUE(r.success) << wy.to_string() << ": " << r.failure;
        EXPECT_EQ(r.cycles.size(), upper_interval(wy).size());
        for (const auto& [w, c] : r.cycles) {
          EXPECT_FALSE(c.is_zero());
          EXPECT_EQ(c, simple_cycle(w, AMatrix(s)).localized(w).scaled(m));
        }
        EXPECT_EQ(r.trace.front().rule, "base");
      }
  }
}

TEST(Replay, RejectsBadMultiplicity) {
  EXPECT_THROW(replay_companion_induction(el(2, "12"), 0, AMatrix(EmbeddingShape(2, 1))), PreconditionError);
}
