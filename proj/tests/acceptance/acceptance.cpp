// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria, so ctest goes red on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "support/generators.hpp"
#include "trilocal/cartan.hpp"
#include "trilocal/companion.hpp"
#include "trilocal/cycles.hpp"
#include "trilocal/flags.hpp"
#include "trilocal/kl.hpp"
#include "trilocal/oracles.hpp"
#include "trilocal/parallel.hpp"
#include "trilocal/schubert.hpp"

using namespace trilocal;

namespace {

// Time limits in seconds; exact arithmetic everywhere else, so no numeric tolerance.
constexpr double kKlLimit = 60;
constexpr double kDwLimit = 60;
constexpr double kTangentLimit = 300;

struct Verdict {
  bool pass = true;
  std::string detail;
};

Verdict fail(std::string why) { return {false, std::move(why)}; }

Verdict kl_cross_validation() {
  std::size_t pairs = 0;
  for (int n : {4, 5}) {
    EmbeddingShape s(n, 1);
    oracle::RPolynomialKL ref(s);
    KLEngine engine;
    const auto elems = all_elements(s);
    for (const auto& x : elems)
      for (const auto& y : elems) {
        if (engine.polynomial(x.part(0), y.part(0)) != ref.kl(x, y))
          return fail("P_{" + x.to_string() + "," + y.to_string() + "} disagrees");
        ++pairs;
      }
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        long long v = verma_multiplicity(elems[i], elems[j]);
        if (i == j ? v != 1 : (!bruhat_leq(elems[j], elems[i]) && v != 0))
          return fail("P(1) matrix not unitriangular at " + elems[i].to_string());
      }
  }
  for (const auto& x : all_permutations(3))
    for (const auto& y : all_permutations(3))
      if (bruhat_leq(x, y) && kl_polynomial(x, y) != KLPolynomial::one()) return fail("S_3 value is not 1");
  return {true, std::to_string(pairs) + " pairs agree, S_3 all ones, P(1) unitriangular"};
}

Verdict dw_consistency() {
  std::size_t count = 0;
  for (int n = 1; n <= 5; ++n)
    for (int sigma = 1; sigma <= 2; ++sigma)
      for (const auto& w : all_elements(EmbeddingShape(n, sigma))) {
        if (d_of(w) + fixed_space_dim(w) != sigma * n) return fail("rank identity at " + w.to_string());
        if ((d_of(w) == w.length()) != oracle::distinct_simple_by_words(w))
          return fail("distinct-simple mismatch at " + w.to_string());
        ++count;
      }
  return {true, std::to_string(count) + " elements"};
}

// dim of {psi : psi and P_w^{-1} psi P_w upper triangular}, by brute-force linear algebra.
int borel_intersection_dim(const WeylElement& w) {
  int total = 0;
  const std::size_t n = w.shape().n;
  for (const auto& part : w.parts()) {
    const auto p = permutation_matrix(part);
    const auto pinv = p.inverse();
    std::vector<std::vector<Rational>> rows;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < a; ++b) {
        std::vector<Rational> lower(n * n), conj(n * n);
        lower[a * n + b] = 1;
        for (std::size_t k = 0; k < n * n; ++k) {
          RationalMatrix e(n, n);
          e(k / n, k % n) = 1;
          conj[k] = (pinv * e * p)(a, b);
        }
        rows.push_back(lower);
        rows.push_back(conj);
      }
    RationalMatrix sys(rows.size(), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < n * n; ++k) sys(r, k) = rows[r][k];
    total += static_cast<int>(rows.empty() ? n * n : sys.nullspace().cols());
  }
  return total;
}

Verdict kappa_relation() {
  std::size_t points = 0;
  for (int n = 1; n <= 4; ++n) {
    EmbeddingShape s(n, 1);
    for (const auto& w : all_elements(s)) {
      std::mt19937_64 rng(derive_seed(2024, w.part(0).code()));
      for (int i = 0; i < 100; ++i) {
        auto pt = testgen::cell_point(rng, w, i % 4 == 0);
        if (kappa(pt, 2) != adjoint_inverse_action(w, kappa(pt, 1))) return fail("relation fails at " + w.to_string());
        ++points;
      }
      const int expected = dim_borel(s) - w.length();
      if (cell_fiber_dimension(w) != expected || borel_intersection_dim(w) != expected)
        return fail("fiber dimension at " + w.to_string());
    }
  }
  return {true, std::to_string(points) + " points, fiber dimension dim B - lg(w)"};
}

Verdict relative_position_check() {
  std::mt19937_64 rng(77);
  for (int pair = 0; pair < 200; ++pair) {
    EmbeddingShape s(1 + pair % 5, 1);
    auto f1 = testgen::flag(rng, s), f2 = testgen::flag(rng, s);
    auto w = relative_position(f1, f2);
    if (w != oracle::relative_position_by_reduction(f1, f2)) return fail("reduction disagrees on pair " + std::to_string(pair));
    auto d = intersection_dims(f1.blocks[0].inverse() * f1.blocks[0], f1.blocks[0].inverse() * f2.blocks[0]);
    if (d != oracle::expected_intersection_dims(w.part(0))) return fail("intersection table on pair " + std::to_string(pair));
    for (int k = 0; k < 20; ++k) {
      auto g = testgen::frame(rng, s);
      if (relative_position(f1.translated(g), f2.translated(g)) != w) return fail("not G-equivariant");
    }
  }
  return {true, "200 pairs, 20 frame changes each"};
}

Verdict schubert_tangents() {
  std::size_t pairs = 0;
  for (const auto& w : all_permutations(4))
    for (const auto& v : all_permutations(4)) {
      if (!bruhat_leq(v, w)) continue;
      if (jacobian_tangent_dim(w, permutation_matrix(v)) != fixed_point_tangent_count(w, v))
        return fail("(" + w.to_string() + ", " + v.to_string() + ")");
      ++pairs;
    }
  std::set<std::string> singular;
  for (const auto& w : all_elements(EmbeddingShape(4, 1)))
    if (!is_smooth_everywhere(w)) singular.insert(w.to_string());
  if (singular != std::set<std::string>{"3412", "4231"}) return fail("singular classes in S_4");
  for (const auto& w : all_elements(EmbeddingShape(3, 1)))
    if (!is_smooth_everywhere(w)) return fail(w.to_string() + " flagged in S_3");
  return {true, std::to_string(pairs) + " pairs, singular classes {3412, 4231}"};
}

Verdict tangent_bounds() {
  std::size_t pairs = 0, equality = 0;
  for (int n = 1; n <= 4; ++n) {
    EmbeddingShape s(n, 1);
    for (const auto& w : all_elements(s))
      for (const auto& wp : lower_interval(w)) {
        const int b = tangent_bound(w, wp);
        if (b < dim_group(s)) return fail("bound below dim G at " + w.to_string() + ", " + wp.to_string());
        const bool hyp = schubert_tangent_dim(w, wp) == orbit_closure_dim(w) &&
                         d_of(w * wp.inverse()) == w.length() - wp.length();
        if (hyp) {
          ++equality;
          if (b != dim_group(s)) return fail("strict inequality in the equality case");
        }
        ++pairs;
      }
  }
  EmbeddingShape s3(3, 1), s2(2, 1);
  auto r = trianguline_tangent_report(longest_element(s3), identity_element(s3));
  if (r.tangent_bound - r.dim_group != 2 || r.specialized_bound != 2) return fail("n = 3, w_x = e excess is not 2");
  for (const auto& wx : all_elements(s2))
    if (trianguline_tangent_report(longest_element(s2), wx).tangent_bound != dim_group(s2))
      return fail("n = 2 excess is not 0");
  return {true, std::to_string(pairs) + " pairs, " + std::to_string(equality) + " equality cases, n=3 excess 2"};
}

Verdict singularity_criterion() {
  std::size_t count = 0;
  for (int n = 1; n <= 4; ++n)
    for (int sigma = 1; sigma <= 2; ++sigma) {
      EmbeddingShape s(n, sigma);
      for (const auto& wx : all_elements(s)) {
        if (singularity_verdict(wx) == oracle::distinct_simple_by_words(wx * longest_element(s)))
          return fail("verdict at " + wx.to_string());
        if (n == 2 && singularity_verdict(wx)) return fail("n = 2 flagged");
        ++count;
      }
    }
  return {true, std::to_string(count) + " elements"};
}

Verdict cycle_identities() {
  std::size_t pairs = 0;
  for (int n = 1; n <= 4; ++n) {
    EmbeddingShape s(n, 1);
    const AMatrix a(s);
    for (const auto& w : all_elements(s))
      for (const auto& wx : lower_interval(w)) {
        Cycle total;
        for (const auto& [v, t] : breuil_mezard_decomposition(w, wx, a)) total = total + t.cycle.scaled(t.multiplicity);
        const auto f = fiber_cycle(w, wx, a);
        if (total != f) return fail("re-sum at " + w.to_string() + ", " + wx.to_string());
        for (const auto& v : bruhat_interval(wx, w))
          if (f.coeff(v) <= 0) return fail("non-positive coefficient");
        ++pairs;
      }
  }
  return {true, std::to_string(pairs) + " (w, w_x) pairs"};
}

CrystallineParam sample_param(const EmbeddingShape& s) {
  CrystallineParam p;
  p.shape = s;
  p.h = IntegralWeight::zero(s);
  for (int t = 0; t < s.sigma; ++t)
    for (int i = 0; i < s.n; ++i) p.h.rows[t][i] = 2 * (s.n - i) + t;
  const long primes[] = {2, 3, 7, 11, 13};
  for (int i = 0; i < s.n; ++i) p.phi.emplace_back(primes[i]);
  p.q = 5;
  return p;
}

Verdict companion_sets() {
  std::size_t count = 0;
  for (int n = 1; n <= 4; ++n)
    for (int sigma = 1; sigma <= 2; ++sigma) {
      EmbeddingShape s(n, sigma);
      const auto p = sample_param(s);
      const auto elems = all_elements(s);
      const auto w0 = longest_element(s);
      for (const auto& wx : elems) {
        std::size_t brute = 0;
        for (const auto& v : elems) brute += oracle::subword_bruhat_leq(wx, v);
        const auto pts = companion_set(p, wx);
        if (pts.size() != brute) return fail("size at " + wx.to_string());
        if (std::none_of(pts.begin(), pts.end(), [&](const CompanionPoint& c) { return c.w == w0; }))
          return fail("w0 missing at " + wx.to_string());
        ++count;
      }
    }
  EmbeddingShape s2(2, 1);
  const auto p = sample_param(s2);
  for (const auto& wx1 : all_elements(s2))
    for (const auto& wx2 : all_elements(s2)) {
      std::map<Refinement, WeylElement> m{{Permutation::parse("12"), wx1}, {Permutation::parse("21"), wx2}};
      std::set<std::vector<Character>> seen;
      for (const auto& r : all_points_over(p, m))
        if (!seen.insert(r.point.characters).second) return fail("duplicate in the n = 2 union");
    }
  return {true, std::to_string(count) + " (shape, w_x) cases, n=2 union duplicate-free"};
}

Verdict replay_and_diamond() {
  std::size_t starts = 0, diamonds = 0;
  for (auto s : {EmbeddingShape(3, 1), EmbeddingShape(2, 2)})
    for (const auto& wy : all_elements(s)) {
      auto r = replay_companion_induction(wy, 1, AMatrix(s));
      if (!r.success) return fail("replay at " + wy.to_string() + ": " + r.failure);
      for (const auto& [w, c] : r.cycles)
        if (c.is_zero()) return fail("zero class");
      ++starts;
    }
  for (int n = 2; n <= 5; ++n) {
    EmbeddingShape s(n, 1);
    const auto elems = all_elements(s);
    const int top = longest_element(s).length();
    for (const auto& w : elems) {
      if (w.length() > top - 2) continue;
      const auto d = diamond(w);
      std::vector<WeylElement> open;
      for (const auto& v : elems)
        if (v != w && v != d.w3 && oracle::subword_bruhat_leq(w, v) && oracle::subword_bruhat_leq(v, d.w3))
          open.push_back(v);
      std::vector<WeylElement> pair{d.w1, d.w2};
      std::sort(pair.begin(), pair.end());
      if (open != pair) return fail("diamond at " + w.to_string());
      ++diamonds;
    }
  }
  return {true, std::to_string(starts) + " replays, " + std::to_string(diamonds) + " diamonds"};
}

Verdict conjecture_probe() {
  EmbeddingShape s2(2, 1), s3(3, 1);
  for (const auto& w : all_elements(s2))
    for (const auto& wp : lower_interval(w)) {
      auto r = probe_conjecture(w, wp, 20, 1);
      if (r.exact_equality != true) return fail("n = 2 not exact at " + w.to_string() + ", " + wp.to_string());
    }
  int pairs = 0, found = 0, total = 0;
  for (const auto& w : all_elements(s3))
    for (const auto& wp : lower_interval(w)) {
      auto r = probe_conjecture(w, wp, 100, derive_seed(5, pairs));
      if (r.found + r.not_found != 100) return fail("trial count");
      found += r.found;
      total += 100;
      ++pairs;
    }
  return {true, "n=2 equality; n=3 " + std::to_string(pairs) + " pairs, found " + std::to_string(found) + "/" +
                    std::to_string(total)};
}

Verdict determinism() {
  const std::vector<std::vector<std::string>> commands = {
      {"kl", "--n", "4", "--table"},
      {"bruhat", "--n", "3", "--x", "123", "--upper"},
      {"dw", "--n", "3", "--sigma", "2"},
      {"cycle", "--n", "3", "--bm", "321", "123", "--format", "json"},
      {"tangent", "--n", "4", "--w", "3412", "--table"},
      {"singular", "--n", "3", "--wx", "123"},
      {"multiplicity", "--n", "4", "--w", "4231", "--wp", "1234"},
      {"replay", "--n", "3", "--wy", "123"},
      {"probe", "--n", "3", "--w", "321", "--wp", "123", "--trials", "30", "--seed", "9"},
      {"check", "--suite", "all", "--seed", "3"},
  };
  for (const auto& base : commands) {
    std::string reference;
    for (const char* jobs : {"1", "2", "8"}) {
      auto args = base;
      args.push_back("--jobs");
      args.push_back(jobs);
      std::ostringstream out, err;
      int code = cli::run_cli(args, out, err);
      std::string got = std::to_string(code) + "\n" + out.str();
      if (jobs[0] == '1') reference = got;
      else if (got != reference) return fail(base[0] + " differs at --jobs " + jobs);
    }
  }
  return {true, std::to_string(commands.size()) + " commands identical at 1, 2, 8 workers"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
    double limit;  // seconds, 0 = none
  };
  const std::vector<Criterion> criteria = {
      {1, "KL cross-validation", kl_cross_validation, kKlLimit},
      {2, "d_w consistency", dw_consistency, kDwLimit},
      {3, "kappa relation", kappa_relation, 0},
      {4, "relative position", relative_position_check, 0},
      {5, "Schubert tangents", schubert_tangents, kTangentLimit},
      {6, "tangent bounds", tangent_bounds, 0},
      {7, "singularity criterion", singularity_criterion, 0},
      {8, "cycle identities", cycle_identities, 0},
      {9, "companion sets", companion_sets, 0},
      {10, "induction replay", replay_and_diamond, 0},
      {11, "conjecture probe", conjecture_probe, 0},
      {12, "determinism", determinism, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.pass && c.limit > 0 && secs > c.limit) v = fail("took " + std::to_string(secs) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << " " << (v.pass ? "PASS" : "FAIL") << " [" << c.name << "] " << v.detail << " ("
         << secs << " s)";
    std::cout << line.str() << std::endl;
    failures += !v.pass;
  }
  return failures;
}
