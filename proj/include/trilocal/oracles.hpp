#pragma once

// Reference implementations that share no algorithmic path with the library
// routines they check.

#include <map>
#include <vector>

#include "trilocal/flags.hpp"
#include "trilocal/kl.hpp"
#include "trilocal/weyl.hpp"

namespace trilocal::oracle {

// Some reduced word of w, letters 1..n-1 (w = s_{i_1} ... s_{i_k}).
std::vector<int> reduced_word(const Permutation& w);
// All reduced words of w.
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

// Subword property: x <= y iff x is a product of a subword of a reduced word of y.
bool subword_bruhat_leq(const Permutation& x, const Permutation& y);
bool subword_bruhat_leq(const WeylElement& x, const WeylElement& y);

// Some reduced word of w uses each simple reflection at most once.
bool distinct_simple_by_words(const WeylElement& w);

// KL polynomials from R-polynomials, computed in the full product group.
class RPolynomialKL {
 public:
  explicit RPolynomialKL(EmbeddingShape shape);
  KLPolynomial r_polynomial(const WeylElement& x, const WeylElement& y);
  KLPolynomial kl(const WeylElement& x, const WeylElement& y);

 private:
  EmbeddingShape shape_;
  std::vector<WeylElement> elems_;
  std::map<WeylElement, std::size_t> index_;
  std::vector<std::vector<bool>> leq_;  // leq_[x][y]
  std::map<std::pair<std::size_t, std::size_t>, KLPolynomial> r_memo_, p_memo_;
  KLPolynomial r_idx(std::size_t x, std::size_t y);
  KLPolynomial p_idx(std::size_t x, std::size_t y);
};

// Relative position by column reduction of F1^{-1} F2 (Bruhat decomposition).
WeylElement relative_position_by_reduction(const Flag& f1, const Flag& f2);
// #{a <= j : w(a) <= i}, the expected dim(E_i cap F_j).
std::vector<std::vector<int>> expected_intersection_dims(const Permutation& w);

// dim ker(P_w - 1) over Q.
int fixed_space_by_kernel(const WeylElement& w);
// Rank over Q of the root differences.
int d_by_rational_rank(const WeylElement& w);

}  // namespace trilocal::oracle
