#include <functional>
#include <map>
#include <optional>
#include <random>

#include "cli.hpp"
#include "trilocal/cartan.hpp"
#include "trilocal/companion.hpp"
#include "trilocal/cycles.hpp"
#include "trilocal/errors.hpp"
#include "trilocal/oracles.hpp"
#include "trilocal/parallel.hpp"
#include "trilocal/schubert.hpp"
#include "trilocal/serialize.hpp"

namespace trilocal::cli {

namespace {

struct Outcome {
  std::string detail;
  std::optional<Json> counterexample;  // set on failure
  std::string verdict = "pass";
};

int pick(int requested, int dflt) { return requested > 0 ? requested : dflt; }

std::vector<EmbeddingShape> shapes(int max_n, int max_sigma) {
  std::vector<EmbeddingShape> out;
  for (int s = 1; s <= max_sigma; ++s)
    for (int n = 1; n <= max_n; ++n) out.emplace_back(n, s);
  return out;
}

// First failing index of a parallel predicate, or nullopt.
template <class Fn>
std::optional<Json> first_failure(std::size_t count, int jobs, Fn fn) {
  auto res = parallel_map(count, jobs, fn);
  for (auto& r : res)
    if (r) return r;
  return std::nullopt;
}

Outcome suite_bruhat(const SuiteOptions& o) {
  std::size_t pairs = 0;
  for (const auto& sh : shapes(pick(o.max_n, 4), 2)) {
    if (sh.sigma == 2 && sh.n > 3) continue;
    const auto elems = all_elements(sh);
    auto bad = first_failure(elems.size(), o.jobs, [&](std::size_t i) -> std::optional<Json> {
      for (const auto& y : elems)
        if (bruhat_leq(elems[i], y) != oracle::subword_bruhat_leq(elems[i], y))
          return Json{{"x", cycle_key(elems[i])}, {"y", cycle_key(y)}};
      return std::nullopt;
    });
    if (bad) return {"", bad};
    pairs += elems.size() * elems.size();
  }
  return {std::to_string(pairs) + " pairs agree with the subword oracle"};
}

Outcome suite_kl(const SuiteOptions& o) {
  std::size_t pairs = 0;
  for (const auto& sh : shapes(pick(o.max_n, 4), 2)) {
    if (sh.sigma == 2 && sh.n > 3) continue;
    oracle::RPolynomialKL ref(sh);
    const auto elems = all_elements(sh);
    for (const auto& x : elems)
      for (const auto& y : elems) {
        if (kl_polynomial(x, y) != ref.kl(x, y))
          return {"", Json{{"x", cycle_key(x)}, {"y", cycle_key(y)}, {"canonical", kl_polynomial(x, y).to_string()},
                           {"oracle", ref.kl(x, y).to_string()}}};
        ++pairs;
      }
  }
  return {std::to_string(pairs) + " pairs agree with the R-polynomial recursion"};
}

Outcome suite_dw(const SuiteOptions& o) {
  std::size_t count = 0;
  for (const auto& sh : shapes(pick(o.max_n, 4), 2)) {
    const auto elems = all_elements(sh);
    auto bad = first_failure(elems.size(), o.jobs, [&](std::size_t i) -> std::optional<Json> {
      const auto& w = elems[i];
      const int d = d_of(w);
      bool ok = d + fixed_space_dim(w) == sh.sigma * sh.n && d == oracle::d_by_rational_rank(w) &&
                fixed_space_dim(w) == oracle::fixed_space_by_kernel(w) &&
                (d == w.length()) == oracle::distinct_simple_by_words(w);
      if (ok) return std::nullopt;
      return Json{{"w", cycle_key(w)}, {"d", d}, {"cycles", fixed_space_dim(w)}};
    });
    if (bad) return {"", bad};
    count += elems.size();
  }
  return {std::to_string(count) + " elements"};
}

LocalModelPoint random_cell_point(const WeylElement& w, std::mt19937_64& rng) {
  const auto& sh = w.shape();
  std::vector<RationalMatrix> g, u;
  std::vector<std::vector<Rational>> t;
  for (int tau = 0; tau < sh.sigma; ++tau) {
    g.push_back(random_invertible(rng, sh.n));
    std::vector<Rational> diag;
    for (int i = 0; i < sh.n; ++i) diag.push_back(random_small_rational(rng));
    t.push_back(diag);
    RationalMatrix m(sh.n, sh.n);
    for (auto [i, j] : upper_support(w.part(tau))) m(i, j) = random_small_rational(rng);
    u.push_back(m);
  }
  return make_cell_point(g, w, t, u);
}

Outcome suite_kappa(const SuiteOptions& o) {
  const int samples = pick(o.samples, 100);
  std::size_t points = 0;
  for (const auto& sh : shapes(pick(o.max_n, 3), 2)) {
    if (sh.sigma == 2 && sh.n > 2) continue;
    const auto elems = all_elements(sh);
    for (std::size_t wi = 0; wi < elems.size(); ++wi) {
      const auto& w = elems[wi];
      if (cell_fiber_dimension(w) != dim_borel(sh) - w.length())
        return {"", Json{{"w", cycle_key(w)}, {"fiber_dimension", cell_fiber_dimension(w)}}};
      auto bad = first_failure(samples, o.jobs, [&](std::size_t k) -> std::optional<Json> {
        std::mt19937_64 rng(derive_seed(o.seed, wi * 1000003 + k));
        auto pt = random_cell_point(w, rng);
        if (relative_position(pt.flag1, pt.flag2) != w) return Json{{"w", cycle_key(w)}, {"sample", k}, {"issue", "relpos"}};
        if (kappa(pt, 2) != adjoint_inverse_action(w, kappa(pt, 1)))
          return Json{{"w", cycle_key(w)}, {"sample", k}, {"issue", "kappa"}};
        return std::nullopt;
      });
      if (bad) return {"", Json{{"shape", sh.to_string()}, {"failure", *bad}}};
      points += samples;
    }
  }
  return {std::to_string(points) + " points satisfy kappa_2 = Ad(w^-1) kappa_1"};
}

Outcome suite_relpos(const SuiteOptions& o) {
  const int samples = pick(o.samples, 200);
  const int max_n = pick(o.max_n, 5);
  auto bad = first_failure(samples, o.jobs, [&](std::size_t k) -> std::optional<Json> {
    std::mt19937_64 rng(derive_seed(o.seed, k));
    const int n = 1 + static_cast<int>(k % max_n);
    const EmbeddingShape sh(n, 1 + static_cast<int>(k / max_n % 2));
    // Force special positions: second flag = first flag times a random element times a Borel.
    const auto& elems = all_elements(sh);
    const auto w = elems[rng() % elems.size()];
    std::vector<RationalMatrix> g, b1, b2;
    for (int t = 0; t < sh.sigma; ++t) {
      g.push_back(random_invertible(rng, n));
      RationalMatrix b(n, n), c(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          b(i, j) = i == j ? Rational(1 + static_cast<long>(rng() % 3)) : random_small_rational(rng);
          c(i, j) = i == j ? Rational(1 + static_cast<long>(rng() % 3)) : random_small_rational(rng);
        }
      b1.push_back(g.back() * b);
      b2.push_back(g.back() * permutation_matrix(w.part(t)) * c);
    }
    Flag f1(b1), f2(b2);
    auto rp = relative_position(f1, f2);
    if (rp != w || oracle::relative_position_by_reduction(f1, f2) != w)
      return Json{{"sample", k}, {"expected", cycle_key(w)}, {"got", cycle_key(rp)}};
    for (int r = 0; r < 20; ++r) {
      std::vector<RationalMatrix> h;
      for (int t = 0; t < sh.sigma; ++t) h.push_back(random_invertible(rng, n));
      if (relative_position(f1.translated(h), f2.translated(h)) != w)
        return Json{{"sample", k}, {"issue", "equivariance"}};
    }
    return std::nullopt;
  });
  if (bad) return {"", bad};
  return {std::to_string(samples) + " flag pairs, 20 frame changes each"};
}

Outcome suite_tangent(const SuiteOptions& o) {
  const int max_n = pick(o.max_n, 4);
  std::size_t pairs = 0;
  for (int n = 1; n <= max_n; ++n) {
    const EmbeddingShape sh(n, 1);
    const auto elems = all_elements(sh);
    auto bad = first_failure(elems.size(), o.jobs, [&](std::size_t i) -> std::optional<Json> {
      const auto& w = elems[i];
      bool smooth = true;
      for (const auto& v : lower_interval(w)) {
        int jac = schubert_tangent_dim(w, v);
        int comb = dim_flag_variety(sh) + fixed_point_tangent_count(w.part(0), v.part(0));
        if (jac != comb) return Json{{"w", cycle_key(w)}, {"v", cycle_key(v)}, {"jacobian", jac}, {"count", comb}};
        smooth = smooth && jac == orbit_closure_dim(w);
      }
      if (smooth != is_smooth_everywhere(w)) return Json{{"w", cycle_key(w)}, {"issue", "pattern criterion"}};
      return std::nullopt;
    });
    if (bad) return {"", bad};
    for (const auto& w : elems) pairs += lower_interval(w).size();
  }
  return {std::to_string(pairs) + " pairs (w, v)"};
}

Outcome suite_bound(const SuiteOptions& o) {
  std::size_t pairs = 0;
  for (const auto& sh : shapes(pick(o.max_n, 4), 1)) {
    const auto elems = all_elements(sh);
    auto bad = first_failure(elems.size(), o.jobs, [&](std::size_t i) -> std::optional<Json> {
      const auto& w = elems[i];
      for (const auto& wp : lower_interval(w)) {
        int b = tangent_bound(w, wp);
        if (b < dim_group(sh)) return Json{{"w", cycle_key(w)}, {"wp", cycle_key(wp)}, {"bound", b}};
        bool hyp = schubert_tangent_dim(w, wp) == orbit_closure_dim(w) &&
                   d_of(w * wp.inverse()) == w.length() - wp.length();
        if (hyp && b != dim_group(sh))
          return Json{{"w", cycle_key(w)}, {"wp", cycle_key(wp)}, {"bound", b}, {"issue", "equality case"}};
      }
      return std::nullopt;
    });
    if (bad) return {"", bad};
    for (const auto& w : elems) pairs += lower_interval(w).size();
  }
  return {std::to_string(pairs) + " pairs satisfy the bound"};
}

Outcome suite_singular(const SuiteOptions& o) {
  std::size_t count = 0;
  for (const auto& sh : shapes(pick(o.max_n, 4), 2)) {
    const auto w0 = longest_element(sh);
    for (const auto& wx : all_elements(sh)) {
      if (singularity_verdict(wx) == oracle::distinct_simple_by_words(wx * w0))
        return {"", Json{{"wx", cycle_key(wx)}}};
      ++count;
    }
  }
  return {std::to_string(count) + " elements"};
}

Outcome suite_cycles(const SuiteOptions& o) {
  std::size_t count = 0;
  for (const auto& sh : shapes(pick(o.max_n, 4), 1)) {
    const auto a = AMatrix::identity(sh);
    const auto elems = all_elements(sh);
    auto bad = first_failure(elems.size(), o.jobs, [&](std::size_t i) -> std::optional<Json> {
      const auto& w = elems[i];
      for (const auto& wx : lower_interval(w)) {
        auto bm = breuil_mezard_decomposition(w, wx, a);  // re-sums or throws
        for (const auto& [v, t] : bm)
          if (t.multiplicity <= 0 || !bruhat_leq(wx, v)) return Json{{"w", cycle_key(w)}, {"wx", cycle_key(wx)}};
        auto f = fiber_cycle(w, wx, a);
        for (const auto& v : bruhat_interval(wx, w))
          if (f.coeff(v) <= 0) return Json{{"w", cycle_key(w)}, {"wx", cycle_key(wx)}, {"v", cycle_key(v)}};
      }
      return std::nullopt;
    });
    if (bad) return {"", bad};
    count += elems.size();
  }
  return {std::to_string(count) + " elements w, all w_x <= w"};
}

CrystallineParam sample_param(const EmbeddingShape& sh, std::mt19937_64& rng) {
  CrystallineParam p;
  p.shape = sh;
  p.q = 5;
  for (int t = 0; t < sh.sigma; ++t) {
    std::vector<long long> row;
    long long cur = static_cast<long long>(rng() % 4);
    for (int i = 0; i < sh.n; ++i) {
      row.push_back(cur);
      cur -= 1 + static_cast<long long>(rng() % 3);
    }
    p.h.rows.push_back(row);
  }
  // Primes 2, 3, 7, 11, ... keep every ratio away from 1 and q = 5.
  static const long primes[] = {2, 3, 7, 11, 13, 17, 19, 23};
  for (int i = 0; i < sh.n; ++i) p.phi.emplace_back(primes[i]);
  return p;
}

Outcome suite_companions(const SuiteOptions& o) {
  std::size_t count = 0;
  for (const auto& sh : shapes(pick(o.max_n, 4), 2)) {
    std::mt19937_64 rng(derive_seed(o.seed, sh.n * 10 + sh.sigma));
    const auto p = sample_param(sh, rng);
    const auto w0 = longest_element(sh);
    for (const auto& wx : all_elements(sh)) {
      auto pts = companion_set(p, wx);
      bool has_w0 = std::any_of(pts.begin(), pts.end(), [&](const CompanionPoint& c) { return c.w == w0; });
      if (pts.size() != upper_interval(wx).size() || !has_w0) return {"", Json{{"wx", cycle_key(wx)}}};
      for (const auto& pt : pts) {
        auto lam = dominant_weight(p);
        auto chars = refinement_character(p, Permutation::identity(sh.n), pt.w);
        if (character_weight(chars, sh) != dot_action(pt.w * w0, lam))
          return {"", Json{{"wx", cycle_key(wx)}, {"w", cycle_key(pt.w)}, {"issue", "weight"}}};
      }
      ++count;
    }
  }
  return {std::to_string(count) + " (shape, w_x) cases"};
}

Outcome suite_diamond(const SuiteOptions& o) {
  std::size_t count = 0;
  for (int n = 1; n <= pick(o.max_n, 4); ++n) {
    const EmbeddingShape sh(n, 1);
    const int top = longest_element(sh).length();
    for (const auto& w : all_elements(sh)) {
      if (w.length() > top - 2) continue;
      for (const auto& d : all_diamonds(w))  // throws unless each open interval has exactly two elements
        if (!(bruhat_leq(w, d.w1) && bruhat_leq(d.w1, d.w3) && bruhat_leq(w, d.w2) && bruhat_leq(d.w2, d.w3)))
          return {"", Json{{"w", cycle_key(w)}, {"w3", cycle_key(d.w3)}}};
      ++count;
    }
  }
  return {std::to_string(count) + " eligible elements"};
}

Outcome suite_replay(const SuiteOptions&) {
  std::size_t count = 0;
  for (const auto& sh : {EmbeddingShape(3, 1), EmbeddingShape(2, 2), EmbeddingShape(2, 1)}) {
    for (const auto& wy : all_elements(sh)) {
      auto r = replay_companion_induction(wy, 1, AMatrix::identity(sh));
      if (!r.success) return {"", to_json(r)};
      ++count;
    }
  }
  return {std::to_string(count) + " starting points w_y"};
}

Outcome suite_conj_n2(const SuiteOptions& o) {
  const EmbeddingShape sh(2, 1);
  std::size_t pairs = 0;
  for (const auto& w : all_elements(sh))
    for (const auto& wp : lower_interval(w)) {
      auto r = probe_conjecture(w, wp, pick(o.samples, 10), o.seed);
      if (!r.exact_equality || !*r.exact_equality || r.not_found != 0) return {"", to_json(r)};
      ++pairs;
    }
  Outcome out{std::to_string(pairs) + " pairs"};
  out.verdict = "equality verified";
  return out;
}

Outcome suite_conj_n3(const SuiteOptions& o) {
  const EmbeddingShape sh(3, 1);
  std::vector<std::pair<WeylElement, WeylElement>> pairs;
  for (const auto& w : all_elements(sh))
    for (const auto& wp : lower_interval(w)) pairs.emplace_back(w, wp);
  const int trials = pick(o.samples, 100);
  auto reps = parallel_map(pairs.size(), o.jobs, [&](std::size_t i) {
    return probe_conjecture(pairs[i].first, pairs[i].second, trials, derive_seed(o.seed, i));
  });
  int found = 0, missing = 0, exact = 0;
  for (const auto& r : reps) {
    found += r.found;
    missing += r.not_found;
    if (r.exact_equality && *r.exact_equality) ++exact;
  }
  return {std::to_string(pairs.size()) + " pairs, " + std::to_string(trials) + " trials each, found " +
          std::to_string(found) + ", not found " + std::to_string(missing) + ", exact equality on " +
          std::to_string(exact) + " pairs"};
}

const std::map<std::string, std::function<Outcome(const SuiteOptions&)>>& registry() {
  static const std::map<std::string, std::function<Outcome(const SuiteOptions&)>> r{
      {"bruhat", suite_bruhat},   {"kl", suite_kl},           {"dw", suite_dw},
      {"kappa", suite_kappa},     {"relpos", suite_relpos},   {"tangent", suite_tangent},
      {"bound", suite_bound},     {"singular", suite_singular}, {"cycles", suite_cycles},
      {"companions", suite_companions}, {"diamond", suite_diamond}, {"replay", suite_replay},
      {"conjinter-n2", suite_conj_n2}, {"conjinter-n3", suite_conj_n3}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, f] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

int run_suite(const std::string& name, const SuiteOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<std::string> todo;
  if (name == "all") {
    todo = suite_names();
  } else if (registry().count(name)) {
    todo.push_back(name);
  } else {
    throw ParseError("unknown suite '" + name + "'");
  }
  int code = kOk;
  for (const auto& s : todo) {
    Outcome r;
    try {
      r = registry().at(s)(opt);
    } catch (const Error& e) {
      r = {"", Json{{"exception", e.what()}}};
    }
    if (r.counterexample) {
      out << s << ": FAIL\n";
      err << Json{{"suite", s}, {"counterexample", *r.counterexample}}.dump() << '\n';
      code = kSuiteFailure;
    } else {
      out << s << ": " << r.verdict << " (" << r.detail << ")\n";
    }
  }
  return code;
}

}  // namespace trilocal::cli
