#include "trilocal/companion.hpp"

#include <set>
#include <tuple>

#include "trilocal/errors.hpp"

namespace trilocal {

bool Character::operator<(const Character& o) const {
  if (weights != o.weights) return weights < o.weights;
  if (unr != o.unr) return unr < o.unr;
  return std::tie(eps_power, modulus_power) < std::tie(o.eps_power, o.modulus_power);
}

void validate_param(const CrystallineParam& p) {
  const auto& s = p.shape;
  if (p.h.rows.size() != static_cast<std::size_t>(s.sigma)) throw ShapeMismatch("h must have sigma rows");
  for (const auto& row : p.h.rows) {
    if (row.size() != static_cast<std::size_t>(s.n)) throw ShapeMismatch("h rows must have n entries");
    for (int i = 0; i + 1 < s.n; ++i)
      if (row[i] <= row[i + 1]) throw PreconditionError("Hodge-Tate weights must be strictly decreasing");
  }
  if (p.phi.size() != static_cast<std::size_t>(s.n)) throw ShapeMismatch("phi must have n entries");
  for (const auto& f : p.phi)
    if (f == 0) throw PreconditionError("Frobenius eigenvalues must be nonzero");
  if (p.q <= 1) throw PreconditionError("q must exceed 1");
}

void validate_generic(const CrystallineParam& p) {
  validate_param(p);
  for (std::size_t i = 0; i < p.phi.size(); ++i)
    for (std::size_t j = 0; j < p.phi.size(); ++j) {
      if (i == j) continue;
      Rational r = p.phi[i] / p.phi[j];
      if (r == 1 || r == p.q) throw GenericityViolation(i, j, format_rational(r));
    }
}

WeylElement wx_from_flags(const CrystallineParam& p, const Flag& refinement, const Flag& hodge) {
  require_same_shape(p.shape, refinement.shape(), "wx_from_flags");
  return relative_position(refinement, hodge);
}

namespace {

std::vector<Character> characters_for(const CrystallineParam& p, const Refinement& j, const WeylElement& w) {
  const auto wh = apply_to_weights(w, p.h);
  std::vector<Character> out;
  for (int i = 0; i < p.shape.n; ++i) {
    Character c;
    for (int t = 0; t < p.shape.sigma; ++t) c.weights.push_back(wh.rows[t][i]);
    c.unr = p.phi[j(i)];
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<CompanionPoint> companion_set(const CrystallineParam& p, const WeylElement& wx) {
  validate_generic(p);
  require_same_shape(p.shape, wx.shape(), "companion_set");
  const auto id = Permutation::identity(p.shape.n);
  std::vector<CompanionPoint> out;
  for (const auto& w : upper_interval(wx)) out.push_back({w, characters_for(p, id, w)});
  return out;
}

std::vector<RefinedCompanionPoint> all_points_over(const CrystallineParam& p,
                                                   const std::map<Refinement, WeylElement>& wx_by_refinement) {
  validate_generic(p);
  std::vector<RefinedCompanionPoint> out;
  std::set<std::vector<Character>> seen;
  for (const auto& j : all_permutations(p.shape.n)) {
    auto it = wx_by_refinement.find(j);
    if (it == wx_by_refinement.end())
      throw PreconditionError("no w_x given for refinement " + j.to_string());
    require_same_shape(p.shape, it->second.shape(), "all_points_over");
    for (const auto& w : upper_interval(it->second)) {
      auto chars = characters_for(p, j, w);
      if (!seen.insert(chars).second) continue;
      out.push_back({j, {w, std::move(chars)}});
    }
  }
  return out;
}

std::vector<Character> iota_twist(const std::vector<Character>& chars, bool inverse) {
  const long long n = static_cast<long long>(chars.size());
  std::vector<Character> out = chars;
  const long long sign = inverse ? -1 : 1;
  for (long long i = 1; i <= n; ++i) {
    out[i - 1].eps_power += sign * (i - 1);
    out[i - 1].modulus_power += sign * (n + 1 - 2 * i);
  }
  return out;
}

std::vector<Character> refinement_character(const CrystallineParam& p, const Refinement& j, const WeylElement& w) {
  validate_param(p);
  require_same_shape(p.shape, w.shape(), "refinement_character");
  if (j.size() != p.shape.n) throw ShapeMismatch("refinement size");
  return iota_twist(characters_for(p, j, w));
}

IntegralWeight dominant_weight(const CrystallineParam& p) {
  auto lambda = IntegralWeight::zero(p.shape);
  const int n = p.shape.n;
  for (int t = 0; t < p.shape.sigma; ++t)
    for (int i = 0; i < n; ++i) lambda.rows[t][i] = p.h.rows[t][n - 1 - i] + i;
  return lambda;
}

IntegralWeight character_weight(const std::vector<Character>& chars, const EmbeddingShape& shape) {
  if (chars.size() != static_cast<std::size_t>(shape.n)) throw ShapeMismatch("character count");
  auto out = IntegralWeight::zero(shape);
  for (int i = 0; i < shape.n; ++i) {
    if (chars[i].weights.size() != static_cast<std::size_t>(shape.sigma)) throw ShapeMismatch("character weights");
    for (int t = 0; t < shape.sigma; ++t) out.rows[t][i] = chars[i].weights[t] + chars[i].eps_power;
  }
  return out;
}

}  // namespace trilocal
