#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "support/generators.hpp"
#include "trilocal/kl.hpp"
#include "trilocal/oracles.hpp"

using namespace trilocal;

namespace {
KLPolynomial kl(const char* x, const char* y) {
  return kl_polynomial(Permutation::parse(x), Permutation::parse(y));
}
}  // namespace

TEST(KLPolynomial, Arithmetic) {
  KLPolynomial a({1, 1}), b({1, -1});
  EXPECT_EQ((a * b).to_string(), "1-q^2");
  EXPECT_EQ((a + b).to_string(), "2");
  EXPECT_EQ((a - a).to_string(), "0");
  EXPECT_EQ(KLPolynomial({1, 2, 1}).to_string(), "1+2q+q^2");
  EXPECT_EQ(a.shifted(2).degree(), 3);
  EXPECT_EQ(KLPolynomial({1, 2, 3}).truncated(1).to_string(), "1+2q");
  EXPECT_EQ(KLPolynomial({1, 2, 1}).at_one(), 4);
}

// Well-known values in S_4.
TEST(KL, KnownValues) {
  EXPECT_EQ(kl("1234", "3412").to_string(), "1+q");
  EXPECT_EQ(kl("1324", "3412").to_string(), "1+q");
  EXPECT_EQ(kl("1234", "4231").to_string(), "1+q");
  EXPECT_EQ(kl("2143", "4231").to_string(), "1+q");
  EXPECT_EQ(kl("1234", "4321").to_string(), "1");
  EXPECT_EQ(kl("2134", "1234").to_string(), "0");
}

TEST(KL, AllOnesOnS3) {
  for (const auto& x : all_permutations(3))
    for (const auto& y : all_permutations(3))
      EXPECT_EQ(kl_polynomial(x, y).to_string(), bruhat_leq(x, y) ? "1" : "0");
}

TEST(KL, AgreesWithRPolynomialOracle) {
  for (auto s : {EmbeddingShape(4, 1), EmbeddingShape(2, 2), EmbeddingShape(3, 2)}) {
    oracle::RPolynomialKL ref(s);
    auto elems = all_elements(s);
    for (const auto& x : elems)
      for (const auto& y : elems) ASSERT_EQ(kl_polynomial(x, y), ref.kl(x, y)) << x.to_string() << " " << y.to_string();
  }
}

TEST(KL, DegreeBoundAndPositivity) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 4;
    auto x = testgen::permutation(rng, n), y = testgen::permutation(rng, n);
    auto p = kl_polynomial(x, y);
    if (!bruhat_leq(x, y)) {
      EXPECT_TRUE(p.is_zero());
      continue;
    }
    EXPECT_EQ(p.coeff(0), 1);
    if (x != y) EXPECT_LE(2 * p.degree(), y.length() - x.length() - 1);
    for (auto c : p.coeffs()) EXPECT_GE(c, 0);
    // Inversion symmetry P_{x,y} = P_{x^-1,y^-1}, and w0-conjugation.
    EXPECT_EQ(p, kl_polynomial(x.inverse(), y.inverse()));
    auto w0 = Permutation::longest(n);
    EXPECT_EQ(p, kl_polynomial(w0 * x * w0, w0 * y * w0));
  }
}

TEST(KL, ProductShapeMultiplies) {
  EmbeddingShape s(4, 2);
  auto x = WeylElement::parse(s, "1234.2143"), y = WeylElement::parse(s, "3412.4231");
  EXPECT_EQ(kl_polynomial(x, y).to_string(), "1+2q+q^2");
}

TEST(KL, VermaMultiplicityUnitriangular) {
  EmbeddingShape s(4, 1);
  for (const auto& w : all_elements(s))
    for (const auto& v : all_elements(s)) {
      long long m = verma_multiplicity(w, v);
      if (w == v) EXPECT_EQ(m, 1);
      else if (!bruhat_leq(v, w)) EXPECT_EQ(m, 0);
      else EXPECT_GE(m, 1);
      EXPECT_EQ(pi_multiplicity(w, v), m);
    }
}

TEST(KL, CacheRoundTrip) {
  auto path = (std::filesystem::temp_directory_path() / "trilocal_kl_cache_test.json").string();
  KLEngine a;
  auto p = a.polynomial(Permutation::parse("12345"), Permutation::parse("45312"));
  a.save_cache(path);
  KLEngine b;
  b.load_cache(path);
  EXPECT_EQ(b.cached_entries(), a.cached_entries());
  EXPECT_EQ(b.polynomial(Permutation::parse("12345"), Permutation::parse("45312")), p);
  std::remove(path.c_str());
  KLEngine c;
  EXPECT_NO_THROW(c.load_cache(path));  // missing file is not an error
  EXPECT_EQ(c.cached_entries(), 0u);
}
