#include "trilocal/flags.hpp"

#include <algorithm>

#include "trilocal/errors.hpp"

namespace trilocal {

Flag::Flag(std::vector<RationalMatrix> b) : blocks(std::move(b)) {
  if (blocks.empty()) throw PreconditionError("flag with no blocks");
  for (const auto& m : blocks)
    if (!m.square() || m.rows() != blocks[0].rows() || m.rows() == 0)
      throw PreconditionError("flag blocks must be square and of equal size");
}

Flag Flag::standard(const EmbeddingShape& shape) {
  return Flag(std::vector<RationalMatrix>(shape.sigma, RationalMatrix::identity(shape.n)));
}

RationalMatrix permutation_matrix(const Permutation& w) {
  RationalMatrix m(w.size(), w.size());
  for (int a = 0; a < w.size(); ++a) m(w(a), a) = 1;
  return m;
}

Flag Flag::from_weyl(const WeylElement& w) {
  std::vector<RationalMatrix> b;
  for (const auto& p : w.parts()) b.push_back(permutation_matrix(p));
  return Flag(std::move(b));
}

EmbeddingShape Flag::shape() const {
  return EmbeddingShape(static_cast<int>(blocks.at(0).rows()), static_cast<int>(blocks.size()));
}

Flag Flag::translated(const std::vector<RationalMatrix>& g) const {
  if (g.size() != blocks.size()) throw ShapeMismatch("translate: embedding count");
  std::vector<RationalMatrix> b;
  for (std::size_t t = 0; t < blocks.size(); ++t) b.push_back(g[t] * blocks[t]);
  return Flag(std::move(b));
}

bool same_flag(const Flag& a, const Flag& b) {
  if (a.shape() != b.shape()) return false;
  for (std::size_t t = 0; t < a.blocks.size(); ++t) {
    const std::size_t n = a.blocks[t].rows();
    for (std::size_t i = 1; i < n; ++i) {
      auto x = a.blocks[t].block(0, 0, n, i), y = b.blocks[t].block(0, 0, n, i);
      if (x.hconcat(y).rank() != i) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> intersection_dims(const RationalMatrix& f1, const RationalMatrix& f2) {
  const std::size_t n = f1.rows();
  if (f2.rows() != n) throw ShapeMismatch("intersection_dims: sizes differ");
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      if (i == 0 || j == 0) continue;
      auto m = f1.block(0, 0, n, i).hconcat(f2.block(0, 0, n, j));
      d[i][j] = static_cast<int>(i + j - m.rank());
    }
  return d;
}

Permutation permutation_from_dims(const std::vector<std::vector<int>>& d) {
  const int n = static_cast<int>(d.size()) - 1;
  std::vector<int> img(n, -1);
  for (int a = 1; a <= n; ++a)
    for (int i = 1; i <= n; ++i) {
      int jump = d[i][a] - d[i - 1][a] - d[i][a - 1] + d[i - 1][a - 1];
      if (jump == 1) {
        if (img[a - 1] != -1) throw InvariantViolation("intersection table has two jumps in a column");
        img[a - 1] = i - 1;
      } else if (jump != 0) {
        throw InvariantViolation("intersection table is not a rank table");
      }
    }
  try {
    return Permutation(std::move(img));
  } catch (const PreconditionError&) {
    throw InvariantViolation("intersection table does not come from a permutation");
  }
}

WeylElement relative_position(const Flag& f1, const Flag& f2) {
  require_same_shape(f1.shape(), f2.shape(), "relative_position");
  std::vector<Permutation> parts;
  for (std::size_t t = 0; t < f1.blocks.size(); ++t) {
    if (f1.blocks[t].rank() != f1.blocks[t].rows() || f2.blocks[t].rank() != f2.blocks[t].rows())
      throw PreconditionError("relative_position: flag matrix is not invertible");
    parts.push_back(permutation_from_dims(intersection_dims(f1.blocks[t], f2.blocks[t])));
  }
  return WeylElement(f1.shape(), std::move(parts));
}

std::vector<std::pair<int, int>> upper_support(const Permutation& w) {
  const auto inv = w.inverse();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j)
      if (inv(i) < inv(j)) out.emplace_back(i, j);
  return out;
}

int cell_fiber_dimension(const WeylElement& w) {
  int d = w.shape().sigma * w.shape().n;
  for (const auto& p : w.parts()) d += static_cast<int>(upper_support(p).size());
  return d;
}

LocalModelPoint make_cell_point(const std::vector<RationalMatrix>& g, const WeylElement& w,
                                const std::vector<std::vector<Rational>>& t_part,
                                const std::vector<RationalMatrix>& u_part) {
  const auto& shape = w.shape();
  const std::size_t n = shape.n;
  if (g.size() != static_cast<std::size_t>(shape.sigma) || t_part.size() != g.size() ||
      u_part.size() != g.size())
    throw ShapeMismatch("make_cell_point: embedding count");
  LocalModelPoint pt;
  std::vector<RationalMatrix> f1, f2;
  bool nilpotent = true;
  for (int t = 0; t < shape.sigma; ++t) {
    if (g[t].rows() != n || !g[t].square()) throw ShapeMismatch("make_cell_point: g block size");
    if (t_part[t].size() != n) throw ShapeMismatch("make_cell_point: t block size");
    if (u_part[t].rows() != n || !u_part[t].square()) throw ShapeMismatch("make_cell_point: u block size");
    auto ginv = g[t].inverse();
    RationalMatrix b = u_part[t];
    auto support = upper_support(w.part(t));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) == 0) continue;
        bool allowed = std::find(support.begin(), support.end(),
                                 std::pair<int, int>(static_cast<int>(i), static_cast<int>(j))) != support.end();
        if (!allowed)
          throw SupportViolation("u entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 ") is outside u cap Ad(w)u");
      }
    for (std::size_t i = 0; i < n; ++i) {
      b(i, i) = t_part[t][i];
      if (t_part[t][i] != 0) nilpotent = false;
    }
    f1.push_back(g[t]);
    f2.push_back(g[t] * permutation_matrix(w.part(t)));
    pt.psi.push_back(g[t] * b * ginv);
  }
  pt.flag1 = Flag(std::move(f1));
  pt.flag2 = Flag(std::move(f2));
  pt.nilpotent = nilpotent;
  return pt;
}

std::vector<std::vector<Rational>> kappa(const LocalModelPoint& pt, int side) {
  if (side != 1 && side != 2) throw PreconditionError("kappa side must be 1 or 2");
  const Flag& f = side == 1 ? pt.flag1 : pt.flag2;
  std::vector<std::vector<Rational>> out;
  for (std::size_t t = 0; t < f.blocks.size(); ++t) {
    auto m = f.blocks[t].inverse() * pt.psi.at(t) * f.blocks[t];
    if (!m.is_upper_triangular()) throw InvariantViolation("psi does not preserve the flag");
    std::vector<Rational> diag;
    for (std::size_t i = 0; i < m.rows(); ++i) diag.push_back(m(i, i));
    out.push_back(std::move(diag));
  }
  return out;
}

std::vector<std::vector<Rational>> adjoint_inverse_action(const WeylElement& w,
                                                          const std::vector<std::vector<Rational>>& k) {
  if (k.size() != static_cast<std::size_t>(w.shape().sigma)) throw ShapeMismatch("adjoint action");
  std::vector<std::vector<Rational>> out = k;
  for (int t = 0; t < w.shape().sigma; ++t) {
    if (k[t].size() != static_cast<std::size_t>(w.shape().n)) throw ShapeMismatch("adjoint action");
    for (int i = 0; i < w.shape().n; ++i) out[t][i] = k[t][w.part(t)(i)];
  }
  return out;
}

std::vector<WeylElement> candidate_components(const LocalModelPoint& pt) {
  const auto wp = relative_position(pt.flag1, pt.flag2);
  const auto k1 = kappa(pt, 1);
  const auto target = adjoint_inverse_action(wp, k1);
  std::vector<WeylElement> out;
  for (const auto& w : upper_interval(wp))
    if (adjoint_inverse_action(w, k1) == target) out.push_back(w);
  return out;
}

Permutation match_roots(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw ShapeMismatch("match_roots: lengths differ");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] == a[j]) throw PreconditionError("match_roots: repeated root " + format_rational(a[i]));
  std::vector<int> img(a.size(), -1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto it = std::find(a.begin(), a.end(), b[i]);
    if (it == a.end()) throw PreconditionError("match_roots: root " + format_rational(b[i]) + " has no match");
    img[i] = static_cast<int>(it - a.begin());
  }
  return Permutation(std::move(img));
}

RationalPolynomial polynomial_from_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> c{1};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return {std::move(c)};
}

RationalPolynomial graded_char_poly(const RationalMatrix& n_mat, const RationalMatrix& flag,
                                    const std::vector<Rational>& labels) {
  if (labels.size() != flag.rows()) throw ShapeMismatch("graded_char_poly: label count");
  auto m = flag.inverse() * n_mat * flag;
  if (!m.is_upper_triangular()) throw InvariantViolation("graded_char_poly: matrix does not preserve the flag");
  std::vector<Rational> roots;
  for (std::size_t i = 0; i < m.rows(); ++i) roots.push_back(labels[i] + m(i, i));
  return polynomial_from_roots(roots);
}

Rational random_small_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  while (true) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    if (m.determinant() != 0) return m;
  }
}

// ---------------------------------------------------------------------------
// Degeneration probe.

namespace {

// Polynomial matrix in t, coefficient k at index k.
using PolyMatrix = std::vector<RationalMatrix>;

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a[0].rows();
  PolyMatrix out(a.size() + b.size() - 1, RationalMatrix(n, n));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

RationalMatrix poly_eval(const PolyMatrix& a, const Rational& t) {
  RationalMatrix out(a[0].rows(), a[0].cols());
  Rational pw = 1;
  for (const auto& c : a) {
    out = out + c.scaled(pw);
    pw *= t;
  }
  return out;
}

// A unipotent lower triangular curve U(t) = 1 + t L_1 + t^2 L_2 + ...
struct Curve {
  PolyMatrix u;      // U(t)
  PolyMatrix u_inv;  // U(t)^{-1}, also polynomial
};

Curve make_curve(const std::vector<RationalMatrix>& ls) {
  const std::size_t n = ls[0].rows();
  Curve c;
  c.u.push_back(RationalMatrix::identity(n));
  for (const auto& l : ls) c.u.push_back(l);
  PolyMatrix minus_v{RationalMatrix(n, n)};
  for (const auto& l : ls) minus_v.push_back(l.scaled(-1));
  PolyMatrix power{RationalMatrix::identity(n)};
  c.u_inv = power;
  for (std::size_t m = 1; m < n; ++m) {
    power = poly_mul(power, minus_v);
    if (power.size() > c.u_inv.size()) c.u_inv.resize(power.size(), RationalMatrix(n, n));
    for (std::size_t k = 0; k < power.size(); ++k) c.u_inv[k] = c.u_inv[k] + power[k];
  }
  return c;
}

// Generic relative position of (B, P U(t) B). The rank minors are polynomials
// in t of degree <= deg(U) n, so that many + 1 sample points realize the generic value.
Permutation generic_position(const RationalMatrix& P, const Curve& c) {
  const std::size_t n = P.rows();
  const auto id = RationalMatrix::identity(n);
  std::vector<std::vector<int>> best;
  const std::size_t points = (c.u.size() - 1) * n + 1;
  for (std::size_t s = 1; s <= points; ++s) {
    auto d = intersection_dims(id, P * poly_eval(c.u, Rational(static_cast<long>(s))));
    if (best.empty()) {
      best = d;
    } else {
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) best[i][j] = std::min(best[i][j], d[i][j]);
    }
  }
  return permutation_from_dims(best);
}

struct UpperCoords {
  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> pos;  // (i, j), i <= j
  explicit UpperCoords(std::size_t n_) : n(n_) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) pos.emplace_back(i, j);
  }
  std::size_t size() const { return pos.size(); }
  std::size_t index(std::size_t i, std::size_t j) const {
    return std::find(pos.begin(), pos.end(), std::make_pair(i, j)) - pos.begin();
  }
  RationalMatrix unit(std::size_t k) const {
    RationalMatrix m(n, n);
    m(pos[k].first, pos[k].second) = 1;
    return m;
  }
};

constexpr std::size_t kPsiDegree = 2;

// psi0 coordinates reachable by some psi(t) = psi0 + t psi1 + t^2 psi2 in b
// with U(t)^{-1} P^{-1} psi(t) P U(t) in b for all t.
RationalMatrix reachable_subspace(const RationalMatrix& P, const Curve& c, const UpperCoords& uc) {
  const std::size_t n = P.rows();
  const auto Pinv = P.inverse();
  const std::size_t vars = (kPsiDegree + 1) * uc.size();
  std::vector<PolyMatrix> per_var;
  for (std::size_t v = 0; v < vars; ++v) {
    PolyMatrix q(v / uc.size() + 1, RationalMatrix(n, n));
    q.back() = Pinv * uc.unit(v % uc.size()) * P;
    per_var.push_back(poly_mul(poly_mul(c.u_inv, q), c.u));
  }
  std::size_t degrees = 0;
  for (const auto& pm : per_var) degrees = std::max(degrees, pm.size());
  std::vector<std::vector<Rational>> rows;
  for (std::size_t d = 0; d < degrees; ++d)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < a; ++b) {
        std::vector<Rational> row(vars);
        bool any = false;
        for (std::size_t v = 0; v < vars; ++v) {
          if (d < per_var[v].size()) row[v] = per_var[v][d](a, b);
          any = any || row[v] != 0;
        }
        if (any) rows.push_back(std::move(row));
      }
  RationalMatrix sys(rows.size(), vars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t v = 0; v < vars; ++v) sys(r, v) = rows[r][v];
  RationalMatrix kernel = rows.empty() ? RationalMatrix::identity(vars) : sys.nullspace();
  return kernel.block(0, 0, uc.size(), kernel.cols());
}

bool in_span(const RationalMatrix& basis, const RationalMatrix& vec) {
  return basis.hconcat(vec).rank() == basis.rank();
}

// Basis of b cap Ad(P) b with diagonal constant on the cycles of wtilde.
RationalMatrix rhs_fiber_basis(const Permutation& wp, const Permutation& wtilde, const UpperCoords& uc) {
  std::vector<std::vector<std::size_t>> cols;
  std::vector<bool> seen(uc.n, false);
  for (std::size_t a = 0; a < uc.n; ++a) {
    if (seen[a]) continue;
    std::vector<std::size_t> col;
    for (std::size_t b = a; !seen[b]; b = wtilde(static_cast<int>(b))) {
      seen[b] = true;
      col.push_back(uc.index(b, b));
    }
    cols.push_back(col);
  }
  for (auto [i, j] : upper_support(wp)) cols.push_back({uc.index(i, j)});
  RationalMatrix out(uc.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (auto r : cols[c]) out(r, c) = 1;
  return out;
}

}  // namespace

ProbeReport probe_conjecture(const WeylElement& w, const WeylElement& wp, int trials, std::uint64_t seed) {
  require_same_shape(w.shape(), wp.shape(), "probe_conjecture");
  if (w.shape().sigma != 1 || w.shape().n > 3) throw PreconditionError("probe_conjecture supports n <= 3, sigma = 1");
  if (!bruhat_leq(wp, w)) throw PreconditionError("probe_conjecture requires w' <= w");
  if (trials < 0) throw PreconditionError("trials must be >= 0");

  ProbeReport rep{w, wp, trials, std::nullopt, 0, 0};
  const std::size_t n = w.shape().n;
  const auto& x = w.part(0);
  const auto& y = wp.part(0);
  const UpperCoords uc(n);
  const auto P = permutation_matrix(y);
  const auto rhs = rhs_fiber_basis(y, x * y.inverse(), uc);
  const std::size_t rhs_dim = rhs.rank();

  std::mt19937_64 rng(seed);
  std::vector<RationalMatrix> pool;
  if (w == wp) {
    pool.push_back(rhs);  // the constant family already fills V_w
    rep.exact_equality = true;
  } else {
    std::vector<std::pair<std::size_t, std::size_t>> lower;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < a; ++b) lower.emplace_back(a, b);
    const std::size_t masks = std::size_t{1} << lower.size();
    auto from_mask = [&](std::size_t mask, bool random_values) {
      RationalMatrix L(n, n);
      std::uniform_int_distribution<int> val(-3, 3);
      for (std::size_t k = 0; k < lower.size(); ++k) {
        if (!(mask >> k & 1)) continue;
        int v = 1;
        if (random_values)
          do v = val(rng); while (v == 0);
        L(lower[k].first, lower[k].second) = v;
      }
      return L;
    };
    std::vector<std::vector<RationalMatrix>> candidates;
    // 0/1 patterns for (L_1, L_2), then random values on random patterns.
    for (std::size_t m1 = 1; m1 < masks; ++m1)
      for (std::size_t m2 = 0; m2 < masks; ++m2) candidates.push_back({from_mask(m1, false), from_mask(m2, false)});
    std::uniform_int_distribution<std::size_t> pick(0, masks - 1);
    for (int r = 0; r < 24; ++r) {
      std::size_t m1 = 0;
      while (m1 == 0) m1 = pick(rng);
      candidates.push_back({from_mask(m1, true), from_mask(pick(rng), true)});
    }
    for (const auto& ls : candidates) {
      const auto curve = make_curve(ls);
      if (generic_position(P, curve) != x) continue;
      auto s = reachable_subspace(P, curve, uc);
      if (!in_span(rhs, s)) throw IdentityFailure("degeneration family leaves the right-hand side");
      if (s.rank() == rhs_dim) rep.exact_equality = true;
      pool.push_back(std::move(s));
    }
  }

  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < trials; ++trial) {
    RationalMatrix point(uc.size(), 1);
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
      Rational a = coef(rng);
      for (std::size_t r = 0; r < uc.size(); ++r) point(r, 0) += a * rhs(r, c);
    }
    bool hit = std::any_of(pool.begin(), pool.end(), [&](const RationalMatrix& s) { return in_span(s, point); });
    hit ? ++rep.found : ++rep.not_found;
  }
  return rep;
}

}  // namespace trilocal
