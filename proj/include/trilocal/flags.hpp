#pragma once

// Pairs of flags, the cells V_w, and the kappa maps on them.
//
// A flag on Q^n is an invertible matrix whose first i columns span F_i; a
// point of G/B for Res GL_n is one such matrix per embedding.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "trilocal/matrix.hpp"
#include "trilocal/weyl.hpp"

namespace trilocal {

struct Flag {
  std::vector<RationalMatrix> blocks;

  Flag() = default;
  explicit Flag(std::vector<RationalMatrix> b);
  static Flag standard(const EmbeddingShape& shape);
  // Columns of the permutation matrix: w e_a = e_{w(a)}.
  static Flag from_weyl(const WeylElement& w);

  EmbeddingShape shape() const;
  // g . F, blockwise.
  Flag translated(const std::vector<RationalMatrix>& g) const;
};

// Same subspaces F_i in every embedding; the representing matrices may differ.
bool same_flag(const Flag& a, const Flag& b);

RationalMatrix permutation_matrix(const Permutation& w);

// One point (F1, F2, psi) with psi preserving both flags. `nilpotent`
// records whether psi is nilpotent, i.e. whether the point lies on the
// nilpotent fiber rather than on the larger Grothendieck space.
struct LocalModelPoint {
  Flag flag1, flag2;
  std::vector<RationalMatrix> psi;
  bool nilpotent = false;

  EmbeddingShape shape() const { return flag1.shape(); }
};

// dims[i][j] = dim(E_i cap F_j), 0 <= i, j <= n.
std::vector<std::vector<int>> intersection_dims(const RationalMatrix& f1, const RationalMatrix& f2);
// Inverts dim(E_i cap F_j) = #{a <= j : w(a) <= i} through its jump pattern.
Permutation permutation_from_dims(const std::vector<std::vector<int>>& dims);

// The unique w with (F1, F2) in the G-orbit of (B, wB), per embedding.
WeylElement relative_position(const Flag& f1, const Flag& f2);

// Positions (i, j), i < j, of u cap Ad(w) u: w^{-1}(i) < w^{-1}(j). 0-based.
std::vector<std::pair<int, int>> upper_support(const Permutation& w);
// sigma n + dim(u cap Ad(w) u), the fiber dimension of V_w over U_w.
int cell_fiber_dimension(const WeylElement& w);

// (g B, g w B, Ad(g)(t + u)) with t diagonal and u in u cap Ad(w) u.
LocalModelPoint make_cell_point(const std::vector<RationalMatrix>& g, const WeylElement& w,
                                const std::vector<std::vector<Rational>>& t_part,
                                const std::vector<RationalMatrix>& u_part);

// Diagonal of g_side^{-1} psi g_side, per embedding. side is 1 or 2.
std::vector<std::vector<Rational>> kappa(const LocalModelPoint& pt, int side);

// (Ad(w^{-1}) k)_{tau,i} = k_{tau, w(i)}.
std::vector<std::vector<Rational>> adjoint_inverse_action(const WeylElement& w,
                                                          const std::vector<std::vector<Rational>>& k);

// Elements w >= relpos(pt) with Ad(w^{-1}) kappa_1 = Ad(relpos^{-1}) kappa_1.
// Every component X_w through pt is among them.
std::vector<WeylElement> candidate_components(const LocalModelPoint& pt);

// The unique w with b_i = a_{w(i)}. Entries of a must be distinct.
Permutation match_roots(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Univariate rational polynomial, coefficient k at index k.
struct RationalPolynomial {
  std::vector<Rational> coeffs;
  bool operator==(const RationalPolynomial&) const = default;
};
RationalPolynomial polynomial_from_roots(const std::vector<Rational>& roots);

// prod_i (Y - (labels_i + (F^{-1} N F)_{ii})), one block.
RationalPolynomial graded_char_poly(const RationalMatrix& n_mat, const RationalMatrix& flag,
                                    const std::vector<Rational>& labels);

struct ProbeReport {
  WeylElement w, wp;
  int trials = 0;
  // Set when a single degeneration family covers the whole fiber over wpB.
  std::optional<bool> exact_equality;
  int found = 0;
  int not_found = 0;
};

// Probes (X_w cap V_{w'}) = V_{w'} cap kappa_1^{-1}(t^{w w'^{-1}}) through
// the base fiber over (B, w'B). Each trial draws a point of the right-hand side
// and looks for a curve psi(t) of degree 2 over the flags w'(1 + t L1 + t^2 L2) whose
// generic member lies in V_w. Supports n <= 3 and sigma = 1.
ProbeReport probe_conjecture(const WeylElement& w, const WeylElement& wp, int trials,
                             std::uint64_t seed);

// Random helpers shared by samplers and tests.
Rational random_small_rational(std::mt19937_64& rng, int bound = 5);
RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n, int bound = 3);

}  // namespace trilocal
