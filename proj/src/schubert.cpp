#include "trilocal/schubert.hpp"

#include <map>
#include <mutex>

#include "trilocal/cartan.hpp"
#include "trilocal/errors.hpp"

namespace trilocal {

int fixed_point_tangent_count(const Permutation& w, const Permutation& v) {
  const int n = w.size();
  int count = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (bruhat_leq(v * Permutation::transposition(n, a, b), w)) ++count;
  return count;
}

namespace {

void subsets(std::size_t universe, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out, std::size_t offset) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t s = start; s < universe; ++s) {
    cur.push_back(s + offset);
    subsets(universe, k, s + 1, cur, out, offset);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t lo, std::size_t hi, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(hi - lo, k, 0, cur, out, lo);
  return out;
}

Rational cofactor(const RationalMatrix& m, std::size_t r, std::size_t c) {
  const std::size_t k = m.rows();
  if (k == 1) return 1;
  std::vector<std::size_t> rs, cs;
  for (std::size_t i = 0; i < k; ++i) {
    if (i != r) rs.push_back(i);
    if (i != c) cs.push_back(i);
  }
  Rational d = m.select(rs, cs).determinant();
  return (r + c) % 2 ? Rational(-d) : d;
}

}  // namespace

int jacobian_tangent_dim(const Permutation& w, const RationalMatrix& h) {
  const std::size_t n = w.size();
  if (h.rows() != n || !h.square()) throw ShapeMismatch("jacobian_tangent_dim: flag size");
  // Variable index of L_{a c}, a > c.
  std::vector<std::vector<int>> var(n, std::vector<int>(n, -1));
  int nvars = 0;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = c + 1; a < n; ++a) var[a][c] = nvars++;

  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t r = 0;
      for (std::size_t a = 0; a < j; ++a)
        if (static_cast<std::size_t>(w(static_cast<int>(a))) < i) ++r;
      const std::size_t k = j - r + 1;
      if (k > n - i || k > j) continue;
      auto corner = h.block(i, 0, n - i, j);
      if (corner.rank() >= k) throw PreconditionError("jacobian_tangent_dim: flag is not in X_w");
      for (const auto& R : k_subsets(i, n, k))
        for (const auto& C : k_subsets(0, j, k)) {
          auto sub = h.select(R, C);
          std::vector<Rational> grad(nvars);
          bool any = false;
          for (std::size_t cc = 0; cc < k; ++cc)
            for (std::size_t rr = 0; rr < k; ++rr) {
              Rational cof = cofactor(sub, rr, cc);
              if (cof == 0) continue;
              const std::size_t col = C[cc];
              for (std::size_t a = col + 1; a < n; ++a) {
                Rational term = cof * h(R[rr], a);
                if (term == 0) continue;
                grad[var[a][col]] += term;
                any = true;
              }
            }
          if (any) rows.push_back(std::move(grad));
        }
    }
  RationalMatrix jac(rows.size(), nvars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int v = 0; v < nvars; ++v) jac(r, v) = rows[r][v];
  return nvars - static_cast<int>(rows.empty() ? 0 : jac.rank());
}

int jacobian_tangent_dim(const WeylElement& w, const Flag& f1, const Flag& f2) {
  require_same_shape(w.shape(), f1.shape(), "jacobian_tangent_dim");
  require_same_shape(w.shape(), f2.shape(), "jacobian_tangent_dim");
  int dim = dim_flag_variety(w.shape());
  for (int t = 0; t < w.shape().sigma; ++t)
    dim += jacobian_tangent_dim(w.part(t), f1.blocks[t].inverse() * f2.blocks[t]);
  return dim;
}

int schubert_tangent_dim(const WeylElement& w, const WeylElement& v) {
  require_same_shape(w.shape(), v.shape(), "schubert_tangent_dim");
  if (!bruhat_leq(v, w)) throw PreconditionError("schubert_tangent_dim requires v <= w");
  static std::mutex mu;
  static std::map<std::pair<Permutation, Permutation>, int> memo;
  int dim = dim_flag_variety(w.shape());
  for (int t = 0; t < w.shape().sigma; ++t) {
    auto key = std::make_pair(w.part(t), v.part(t));
    int value;
    {
      std::lock_guard lock(mu);
      auto it = memo.find(key);
      value = it == memo.end() ? -1 : it->second;
    }
    if (value < 0) {
      value = jacobian_tangent_dim(w.part(t), permutation_matrix(v.part(t)));
      std::lock_guard lock(mu);
      memo.emplace(key, value);
    }
    dim += value;
  }
  return dim;
}

int orbit_closure_dim(const WeylElement& w) { return dim_flag_variety(w.shape()) + w.length(); }

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
  const int n = w.size(), k = pattern.size();
  if (k > n) return false;
  std::vector<int> pos(k);
  // Iterate increasing k-tuples of positions.
  for (int i = 0; i < k; ++i) pos[i] = i;
  while (true) {
    bool match = true;
    for (int a = 0; a < k && match; ++a)
      for (int b = a + 1; b < k && match; ++b)
        match = (w(pos[a]) < w(pos[b])) == (pattern(a) < pattern(b));
    if (match) return true;
    int i = k - 1;
    while (i >= 0 && pos[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

bool is_smooth_everywhere(const WeylElement& w) {
  static const auto p3412 = Permutation::parse("3412");
  static const auto p4231 = Permutation::parse("4231");
  for (const auto& p : w.parts())
    if (contains_pattern(p, p3412) || contains_pattern(p, p4231)) return false;
  return true;
}

int tangent_bound(const WeylElement& w, const WeylElement& wp) {
  require_same_shape(w.shape(), wp.shape(), "tangent_bound");
  const int lg_w0 = longest_element(w.shape()).length();
  return schubert_tangent_dim(w, wp) + fixed_space_dim(w * wp.inverse()) + (lg_w0 - wp.length());
}

std::vector<TangentRow> tangent_table(const WeylElement& w) {
  std::vector<TangentRow> out;
  const int cell = orbit_closure_dim(w);
  for (const auto& v : lower_interval(w)) {
    int t = schubert_tangent_dim(w, v);
    out.push_back({w, v, cell, t, t == cell});
  }
  return out;
}

TriangulineTangentReport trianguline_tangent_report(const WeylElement& w, const WeylElement& wx) {
  require_same_shape(w.shape(), wx.shape(), "trianguline_tangent_report");
  if (!bruhat_leq(wx, w)) throw PreconditionError("trianguline_tangent_report requires w_x <= w");
  TriangulineTangentReport rep;
  rep.w = w;
  rep.wx = wx;
  rep.dim_group = dim_group(w.shape());
  rep.tangent_bound = tangent_bound(w, wx);
  rep.delta_bound = rep.tangent_bound - rep.dim_group;
  const auto w0 = longest_element(w.shape());
  if (w == w0) {
    const auto u = wx * w0;
    rep.specialized_bound = u.length() - d_of(u);
    if (*rep.specialized_bound != rep.delta_bound)
      throw IdentityFailure("specialized bound disagrees with the general bound");
  }
  rep.schubert_smooth_at_point = schubert_tangent_dim(w, wx) == orbit_closure_dim(w);
  return rep;
}

bool singularity_verdict(const WeylElement& wx) {
  const auto u = wx * longest_element(wx.shape());
  return d_of(u) < u.length();
}

}  // namespace trilocal
