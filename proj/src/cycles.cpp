#include "trilocal/cycles.hpp"

#include <algorithm>

#include "trilocal/cartan.hpp"
#include "trilocal/errors.hpp"
#include "trilocal/kl.hpp"
#include "trilocal/matrix.hpp"

namespace trilocal {

std::string cycle_key(const WeylElement& w) { return w.to_string(); }

Cycle Cycle::basis(const WeylElement& w, long long c) {
  Cycle z;
  z.add(w, c);
  return z;
}

void Cycle::add(const WeylElement& w, long long c) {
  if (c == 0) return;
  if (!terms_.empty()) require_same_shape(terms_.begin()->first.shape(), w.shape(), "cycle");
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

Cycle Cycle::operator+(const Cycle& o) const {
  Cycle out(*this);
  for (const auto& [w, c] : o.terms_) out.add(w, c);
  return out;
}

Cycle Cycle::operator-(const Cycle& o) const { return *this + o.scaled(-1); }

Cycle Cycle::scaled(long long c) const {
  Cycle out;
  if (c == 0) return out;
  for (const auto& [w, x] : terms_) out.terms_.emplace(w, x * c);
  return out;
}

long long Cycle::coeff(const WeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

bool Cycle::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

Cycle Cycle::localized(const WeylElement& wx) const {
  Cycle out;
  for (const auto& [w, c] : terms_)
    if (bruhat_leq(wx, w)) out.terms_.emplace(w, c);
  return out;
}

void AMatrix::set(const WeylElement& w, const WeylElement& wp, long long value) {
  require_same_shape(shape_, w.shape(), "AMatrix::set");
  require_same_shape(shape_, wp.shape(), "AMatrix::set");
  if (w == wp) {
    if (value != 1) throw PreconditionError("a-matrix diagonal entries must be 1");
    return;
  }
  if (value != 0 && !bruhat_leq(wp, w))
    throw PreconditionError("a-matrix entry a_{" + w.to_string() + "," + wp.to_string() +
                            "} must vanish unless w' <= w");
  if (value == 0)
    entries_.erase({w, wp});
  else
    entries_[{w, wp}] = value;
}

long long AMatrix::get(const WeylElement& w, const WeylElement& wp) const {
  if (w == wp) return 1;
  auto it = entries_.find({w, wp});
  return it == entries_.end() ? 0 : it->second;
}

Cycle simple_cycle(const WeylElement& w, const AMatrix& a) {
  require_same_shape(w.shape(), a.shape(), "simple_cycle");
  if (w.shape().n > kDefaultAMatrixMaxN && a.is_default())
    throw AMatrixGuard("n = " + std::to_string(w.shape().n) +
                       ": the identity a-matrix is not justified; supply --a-matrix");
  Cycle c = Cycle::basis(w);
  if (a.is_default()) return c;
  for (const auto& v : lower_interval(w))
    if (v != w) c.add(v, a.get(w, v));
  return c;
}

Cycle verma_cycle(const WeylElement& w, const AMatrix& a) {
  Cycle out;
  for (const auto& v : lower_interval(w)) out = out + simple_cycle(v, a).scaled(verma_multiplicity(w, v));
  return out;
}

Cycle fiber_cycle(const WeylElement& w, const WeylElement& wx, const AMatrix& a) {
  require_same_shape(w.shape(), wx.shape(), "fiber_cycle");
  Cycle out;
  for (const auto& v : bruhat_interval(wx, w))
    out = out + simple_cycle(v, a).localized(wx).scaled(verma_multiplicity(w, v));
  return out;
}

std::map<WeylElement, BMTerm> breuil_mezard_decomposition(const WeylElement& w, const WeylElement& wx,
                                                          const AMatrix& a) {
  require_same_shape(w.shape(), wx.shape(), "breuil_mezard_decomposition");
  std::map<WeylElement, BMTerm> out;
  Cycle total;
  for (const auto& v : lower_interval(w)) {
    long long m = pi_multiplicity(w, v);
    if (m == 0) continue;
    Cycle c = simple_cycle(v, a).localized(wx);
    if (c.is_zero()) continue;
    total = total + c.scaled(m);
    out.emplace(v, BMTerm{m, std::move(c)});
  }
  if (total != fiber_cycle(w, wx, a))
    throw IdentityFailure("Breuil-Mezard decomposition does not re-sum to the fibre cycle");
  return out;
}

std::vector<SteinbergComponent> steinberg_basis(const EmbeddingShape& shape) {
  std::vector<SteinbergComponent> out;
  const int dim = dim_group(shape) - dim_torus(shape);
  for (const auto& w : all_elements(shape)) out.push_back({w, dim});
  return out;
}

std::vector<std::vector<long long>> verma_change_of_basis(const EmbeddingShape& shape) {
  const auto elems = all_elements(shape);
  std::vector<std::vector<long long>> m(elems.size(), std::vector<long long>(elems.size(), 0));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (bruhat_leq(elems[j], elems[i])) m[i][j] = verma_multiplicity(elems[i], elems[j]);
  return m;
}

// ---------------------------------------------------------------------------

namespace {

// Bounds on m' from effectivity of A + m' B.
struct Interval {
  std::optional<Rational> lo, hi;
  bool empty = false;
  void constrain(const Rational& alpha, const Rational& beta) {
    if (beta == 0) {
      if (alpha < 0) empty = true;
    } else if (beta > 0) {
      Rational b = -alpha / beta;
      if (!lo || b > *lo) lo = b;
    } else {
      Rational b = alpha / -beta;
      if (!hi || b < *hi) hi = b;
    }
  }
  std::string describe() const {
    if (empty) return "empty";
    return "[" + (lo ? format_rational(*lo) : std::string("-inf")) + ", " +
           (hi ? format_rational(*hi) : std::string("+inf")) + "]";
  }
};

struct Affine {  // A + m' B
  Cycle a, b;
};

}  // namespace

ReplayResult replay_companion_induction(const WeylElement& wy, long long m, const AMatrix& a) {
  require_same_shape(wy.shape(), a.shape(), "replay_companion_induction");
  if (m < 1) throw PreconditionError("replay requires m >= 1");
  ReplayResult res;
  res.wy = wy;
  res.m = m;
  const auto w0 = longest_element(wy.shape());
  auto elems = upper_interval(wy);
  std::sort(elems.begin(), elems.end(), [](const WeylElement& x, const WeylElement& y) {
    if (x.length() != y.length()) return x.length() > y.length();
    return x.parts() < y.parts();
  });

  auto c_at = [&](const WeylElement& v, const WeylElement& at) { return simple_cycle(v, a).localized(at); };
  auto fail = [&](const WeylElement& w, std::string why) {
    res.success = false;
    res.failed_at = w;
    res.failure = std::move(why);
    return res;
  };

  for (const auto& w : elems) {
    if (w == w0) {
      res.trace.push_back({"base", w, {}, "[L(w0)] = m c_{w0}"});
      res.cycles[w] = c_at(w, w).scaled(m);
      continue;
    }
    if (w.length() == w0.length() - 1) {
      // c0 c_{w0} + P_{e, w0 w}(1) m' c_w = m (c_{w0} + P_{e, w0 w}(1) c_w), localized at w.
      const long long p_top = verma_multiplicity(w0, w0);
      const long long p_w = verma_multiplicity(w0, w);
      if (p_top != 1 || p_w != 1)
        return fail(w, "KL multiplicities on [w, w0] are not 1");
      const Cycle cw0 = c_at(w0, w), cw = c_at(w, w);
      const Cycle rhs = cw0.scaled(m) + cw.scaled(m);
      std::vector<WeylElement> support;
      for (const auto* c : {&cw0, &cw, &rhs})
        for (const auto& [v, x] : c->terms())
          if (std::find(support.begin(), support.end(), v) == support.end()) support.push_back(v);
      RationalMatrix sys(support.size(), 3);
      for (std::size_t r = 0; r < support.size(); ++r) {
        sys(r, 0) = static_cast<long>(cw0.coeff(support[r]) * p_top);
        sys(r, 1) = static_cast<long>(cw.coeff(support[r]) * p_w);
        sys(r, 2) = static_cast<long>(rhs.coeff(support[r]));
      }
      if (sys.block(0, 0, support.size(), 2).rank() != 2)
        return fail(w, "c_{w0} and c_w are linearly dependent at w");
      auto reduced = sys;
      auto piv = row_reduce(reduced);
      if (piv.size() != 2) return fail(w, "the equation at w0 has no solution");
      Rational c0 = reduced(0, 2), mp = reduced(1, 2);
      if (c0 < 0) return fail(w, "crystalline multiplicity c0 = " + format_rational(c0) + " < 0");
      const Rational target(static_cast<long>(m));
      if (mp != target || c0 != target)
        return fail(w, "forced (c0, m') = (" + format_rational(c0) + ", " + format_rational(mp) + ") differs from m");
      res.trace.push_back({"step5", w, {w0},
                           "linear independence of c_{w0}, c_w gives c0 = m' = " + std::to_string(m)});
      res.cycles[w] = c_at(w, w).scaled(m);
      continue;
    }

    const Diamond d = diamond(w);
    if (bruhat_interval(w, d.w3).size() != 4) return fail(w, "diamond interval does not have 4 elements");
    const std::vector<WeylElement> tops{d.w1, d.w2, d.w3};
    // [L(v)] = sum over [w, v] solved forward: [L(v)] = A_v + m' B_v.
    std::map<WeylElement, Affine> known;
    known[w] = {Cycle{}, c_at(w, w)};
    for (const auto& v : tops) {
      Affine lv{Cycle{}, Cycle{}};
      for (const auto& u : bruhat_interval(w, v)) {
        long long p = verma_multiplicity(v, u);
        lv.a = lv.a + c_at(u, w).scaled(m * p);
        if (u == v) continue;
        const auto& ku = known.at(u);
        lv.a = lv.a - ku.a.scaled(p);
        lv.b = lv.b - ku.b.scaled(p);
      }
      if (verma_multiplicity(v, v) != 1) return fail(w, "diagonal multiplicity is not 1");
      known[v] = lv;
    }
    Interval feasible;
    feasible.constrain(0, 1);  // m' >= 0
    for (const auto& v : tops) {
      const auto& lv = known.at(v);
      std::vector<WeylElement> support;
      for (const auto* c : {&lv.a, &lv.b})
        for (const auto& [u, x] : c->terms())
          if (std::find(support.begin(), support.end(), u) == support.end()) support.push_back(u);
      for (const auto& u : support)
        feasible.constrain(Rational(static_cast<long>(lv.a.coeff(u))), Rational(static_cast<long>(lv.b.coeff(u))));
    }
    const Rational target(static_cast<long>(m));
    if (feasible.empty || !feasible.lo || !feasible.hi || *feasible.lo != target || *feasible.hi != target)
      return fail(w, "effectivity leaves m' in " + feasible.describe() + " on [" + w.to_string() + ", " +
                         d.w3.to_string() + "]");
    res.trace.push_back({"step8", w, tops, "effectivity on the diamond forces m' = " + std::to_string(m)});
    res.cycles[w] = c_at(w, w).scaled(m);
  }
  for (const auto& [v, c] : res.cycles)
    if (c.is_zero()) return fail(v, "deduced cycle vanishes");
  res.success = true;
  return res;
}

}  // namespace trilocal
