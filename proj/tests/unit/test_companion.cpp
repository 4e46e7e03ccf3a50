#include <gtest/gtest.h>

#include <set>

#include "trilocal/companion.hpp"
#include "trilocal/errors.hpp"

using namespace trilocal;

namespace {
CrystallineParam param(int n, int sigma) {
  CrystallineParam p;
  p.shape = EmbeddingShape(n, sigma);
  p.h = IntegralWeight::zero(p.shape);
  for (int t = 0; t < sigma; ++t)
    for (int i = 0; i < n; ++i) p.h.rows[t][i] = 3 * (n - i) + t;
  const long primes[] = {2, 3, 7, 11, 13};
  for (int i = 0; i < n; ++i) p.phi.emplace_back(primes[i]);
  p.q = 5;
  return p;
}
}  // namespace

TEST(Genericity, DetectsBadRatios) {
  auto p = param(3, 1);
  EXPECT_NO_THROW(validate_generic(p));
  p.phi[2] = p.phi[0] * 5;
  try {
    validate_generic(p);
    FAIL() << "expected GenericityViolation";
  } catch (const GenericityViolation& e) {
    EXPECT_EQ(e.i(), 2u);
    EXPECT_EQ(e.j(), 0u);
    EXPECT_EQ(e.ratio(), "5");
  }
  p.phi[2] = p.phi[1];
  EXPECT_THROW(validate_generic(p), GenericityViolation);
}

TEST(Param, Validation) {
  auto p = param(2, 1);
  p.h.rows[0] = {1, 1};
  EXPECT_THROW(validate_param(p), PreconditionError);
  p = param(2, 1);
  p.q = 1;
  EXPECT_THROW(validate_param(p), PreconditionError);
  p = param(2, 1);
  p.phi.pop_back();
  EXPECT_THROW(validate_param(p), ShapeMismatch);
}

TEST(CompanionSet, SizeAndLongestPresent) {
  for (int n = 1; n <= 4; ++n)
    for (int sigma = 1; sigma <= 2; ++sigma) {
      auto p = param(n, sigma);
      for (const auto& wx : all_elements(p.shape)) {
        auto pts = companion_set(p, wx);
        EXPECT_EQ(pts.size(), upper_interval(wx).size());
        EXPECT_EQ(pts.back().w, longest_element(p.shape));
      }
    }
}

TEST(CompanionSet, WeightsAreDotShifted) {
  auto p = param(3, 2);
  const auto lambda = dominant_weight(p);
  const auto w0 = longest_element(p.shape);
  for (const auto& pt : companion_set(p, identity_element(p.shape))) {
    auto twisted = iota_twist(pt.characters);
    EXPECT_EQ(character_weight(twisted, p.shape), dot_action(pt.w * w0, lambda));
    EXPECT_EQ(iota_twist(twisted, true), pt.characters);
  }
}

TEST(CompanionSet, WxFromFlags) {
  auto p = param(3, 1);
  auto w = WeylElement::parse(p.shape, "231");
  EXPECT_EQ(wx_from_flags(p, Flag::standard(p.shape), Flag::from_weyl(w)), w);
}

TEST(AllRefinements, RankTwoUnion) {
  auto p = param(2, 1);
  std::map<Refinement, WeylElement> wx;
  for (const auto& j : all_permutations(2)) wx[j] = identity_element(p.shape);
  auto pts = all_points_over(p, wx);
  std::set<std::vector<Character>> seen;
  for (const auto& r : pts) EXPECT_TRUE(seen.insert(r.point.characters).second);
  EXPECT_EQ(pts.size(), 4u);
  wx.erase(wx.begin());
  EXPECT_THROW(all_points_over(p, wx), PreconditionError);
}

TEST(AllRefinements, RefinementCharacterOrdersPhi) {
  auto p = param(3, 1);
  auto j = Permutation::parse("312");
  auto chars = refinement_character(p, j, identity_element(p.shape));
  EXPECT_EQ(chars[0].unr, p.phi[2]);
  EXPECT_EQ(chars[0].modulus_power, 2);
  EXPECT_EQ(chars[2].eps_power, 2);
}
