#pragma once

// Hand-rolled generators for property tests. Every generator takes the
// engine by reference so a failing case can be replayed from its seed.

#include <algorithm>
#include <random>
#include <vector>

#include "trilocal/flags.hpp"
#include "trilocal/matrix.hpp"
#include "trilocal/weyl.hpp"

namespace trilocal::testgen {

inline EmbeddingShape shape(std::mt19937_64& rng, int max_n, int max_sigma) {
  std::uniform_int_distribution<int> n(1, max_n), s(1, max_sigma);
  return EmbeddingShape(n(rng), s(rng));
}

inline Permutation permutation(std::mt19937_64& rng, int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

inline WeylElement element(std::mt19937_64& rng, const EmbeddingShape& s) {
  std::vector<Permutation> parts;
  for (int t = 0; t < s.sigma; ++t) parts.push_back(permutation(rng, s.n));
  return WeylElement(s, std::move(parts));
}

inline RationalMatrix matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound = 4) {
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_small_rational(rng, bound);
  return m;
}

// Rank-deficient matrix of rank at most k, built as a product.
inline RationalMatrix low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
  return matrix(rng, r, k) * matrix(rng, k, c);
}

inline Flag flag(std::mt19937_64& rng, const EmbeddingShape& s) {
  std::vector<RationalMatrix> b;
  for (int t = 0; t < s.sigma; ++t) b.push_back(random_invertible(rng, s.n));
  return Flag(std::move(b));
}

inline std::vector<RationalMatrix> frame(std::mt19937_64& rng, const EmbeddingShape& s) {
  return flag(rng, s).blocks;
}

// A point of V_w: random frame, torus part and u cap Ad(w)u part.
inline LocalModelPoint cell_point(std::mt19937_64& rng, const WeylElement& w, bool nilpotent = false) {
  const auto& s = w.shape();
  std::vector<std::vector<Rational>> t(s.sigma);
  std::vector<RationalMatrix> u;
  for (int tau = 0; tau < s.sigma; ++tau) {
    for (int i = 0; i < s.n; ++i) t[tau].push_back(nilpotent ? Rational(0) : random_small_rational(rng));
    RationalMatrix m(s.n, s.n);
    for (auto [i, j] : upper_support(w.part(tau))) m(i, j) = random_small_rational(rng);
    u.push_back(std::move(m));
  }
  return make_cell_point(frame(rng, s), w, t, u);
}

}  // namespace trilocal::testgen
