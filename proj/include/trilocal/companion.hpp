#pragma once

// Companion points of a generic crystalline point on the trianguline variety.
// The cyclotomic character eps and |.| are kept symbolic as exponents.

#include <map>
#include <vector>

#include "trilocal/flags.hpp"
#include "trilocal/matrix.hpp"
#include "trilocal/weyl.hpp"

namespace trilocal {

struct CrystallineParam {
  EmbeddingShape shape;
  IntegralWeight h;           // strictly decreasing along each row
  std::vector<Rational> phi;  // Frobenius eigenvalues
  Rational q;                 // residue field cardinality
};

// z^{weights} unr(unr) eps^{eps_power} |.|^{modulus_power}; weights has one entry per embedding.
struct Character {
  std::vector<long long> weights;
  Rational unr;
  long long eps_power = 0;
  long long modulus_power = 0;
  bool operator==(const Character&) const = default;
  bool operator<(const Character& o) const;
};

struct CompanionPoint {
  WeylElement w;
  std::vector<Character> characters;  // delta_1, ..., delta_n
};

// Throws GenericityViolation for the first ordered pair (i, j) with phi_i / phi_j in {1, q}.
void validate_generic(const CrystallineParam& p);
// Checks shape, strictly decreasing rows of h, q > 1 and phi_i != 0.
void validate_param(const CrystallineParam& p);

// Relative position of the refinement flag and the Hodge flag.
WeylElement wx_from_flags(const CrystallineParam& p, const Flag& refinement, const Flag& hodge);

// One point z^{w(h)_i} unr(phi_i) for each w >= w_x, canonical order.
std::vector<CompanionPoint> companion_set(const CrystallineParam& p, const WeylElement& wx);

// A refinement is an ordering (phi_{j_1}, ..., phi_{j_n}), recorded as j.
using Refinement = Permutation;

struct RefinedCompanionPoint {
  Refinement refinement;
  CompanionPoint point;
};

// Union over all n! refinements, duplicates merged. Needs one w_x per refinement.
std::vector<RefinedCompanionPoint> all_points_over(const CrystallineParam& p,
                                                   const std::map<Refinement, WeylElement>& wx_by_refinement);

// delta_i -> delta_i eps^{i-1} |.|^{n+1-2i}; with inverse the twist is undone.
std::vector<Character> iota_twist(const std::vector<Character>& chars, bool inverse = false);

// iota of (z^{w(h)_i} unr(phi_{j_i}))_i.
std::vector<Character> refinement_character(const CrystallineParam& p, const Refinement& j,
                                            const WeylElement& w);

// lambda_{tau,i} = h_{tau, n+1-i} + i - 1.
IntegralWeight dominant_weight(const CrystallineParam& p);
// Weight of each character: algebraic part plus the eps exponent; rows per embedding.
IntegralWeight character_weight(const std::vector<Character>& chars, const EmbeddingShape& shape);

}  // namespace trilocal
