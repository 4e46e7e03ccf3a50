#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "trilocal/cartan.hpp"
#include "trilocal/companion.hpp"
#include "trilocal/cycles.hpp"
#include "trilocal/errors.hpp"
#include "trilocal/kl.hpp"
#include "trilocal/parallel.hpp"
#include "trilocal/schubert.hpp"
#include "trilocal/serialize.hpp"

namespace trilocal::cli {

namespace {

struct Common {
  int n = 0;
  int sigma = 1;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string format;
  std::string a_matrix;
  std::string out;
  std::string kl_cache;
};

void add_common(CLI::App* sub, Common& c, bool needs_n = true) {
  auto* n = sub->add_option("--n", c.n, "rank n of GL_n")->check(CLI::Range(1, 16));
  if (needs_n) n->required();
  sub->add_option("--sigma", c.sigma, "number of embeddings")->check(CLI::Range(1, 8));
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 256));
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--a-matrix", c.a_matrix, "JSON file with the a_{w,w'} matrix");
  sub->add_option("--out", c.out, "write output to this file");
  sub->add_option("--kl-cache", c.kl_cache, "persistent KL cache file");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

EmbeddingShape shape_of(const Common& c) { return EmbeddingShape(c.n, c.sigma); }

WeylElement element(const Common& c, const std::string& s) { return WeylElement::parse(shape_of(c), s); }

AMatrix load_amatrix(const Common& c) {
  if (c.a_matrix.empty()) return AMatrix::identity(shape_of(c));
  return amatrix_from_json(read_json_file(c.a_matrix), shape_of(c));
}

std::string fmt(const Common& c, const std::string& dflt) { return c.format.empty() ? dflt : c.format; }

void print_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

void cmd_kl(const Common& c, const std::string& x, const std::string& y, bool table, std::ostream& os) {
  auto& engine = KLEngine::shared();
  if (!c.kl_cache.empty()) engine.load_cache(c.kl_cache);
  const auto shape = shape_of(c);
  if (table) {
    const auto elems = all_elements(shape);
    auto rows = parallel_map(elems.size(), c.jobs, [&](std::size_t i) {
      std::vector<std::pair<std::size_t, KLPolynomial>> r;
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (bruhat_leq(elems[i], elems[j])) r.emplace_back(j, engine.polynomial(elems[i], elems[j]));
      return r;
    });
    const std::string f = fmt(c, "csv");
    if (f == "csv") {
      os << "x,y,poly\n";
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, p] : rows[i])
          os << elems[i].to_string() << ',' << elems[j].to_string() << ',' << p.to_string() << '\n';
    } else {
      Json arr = Json::array();
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, p] : rows[i])
          arr.push_back(Json{{"x", to_json(elems[i])}, {"y", to_json(elems[j])}, {"coeffs", to_json(p)}});
      print_json(os, arr);
    }
  } else {
    if (x.empty() || y.empty()) throw ParseError("kl needs --x and --y, or --table");
    auto p = engine.polynomial(element(c, x), element(c, y));
    if (fmt(c, "text") == "json")
      print_json(os, Json{{"x", to_json(element(c, x))}, {"y", to_json(element(c, y))}, {"coeffs", to_json(p)},
                          {"text", p.to_string()}});
    else
      os << p.to_string() << '\n';
  }
  if (!c.kl_cache.empty()) engine.save_cache(c.kl_cache);
}

void cmd_bruhat(const Common& c, const std::string& x, const std::string& y, const std::string& upper,
                std::ostream& os) {
  if (!upper.empty()) {
    Json arr = Json::array();
    for (const auto& v : upper_interval(element(c, upper))) arr.push_back(to_json(v));
    print_json(os, arr);
    return;
  }
  if (x.empty() || y.empty()) throw ParseError("bruhat needs --x and --y, or --upper");
  bool leq = bruhat_leq(element(c, x), element(c, y));
  if (fmt(c, "text") == "json")
    print_json(os, Json{{"x", to_json(element(c, x))}, {"y", to_json(element(c, y))}, {"leq", leq}});
  else
    os << (leq ? "true" : "false") << '\n';
}

Json dw_row(const WeylElement& w) {
  return Json{{"w", to_json(w)},
              {"length", w.length()},
              {"d", d_of(w)},
              {"fixed_space_dim", fixed_space_dim(w)},
              {"distinct_simple", is_distinct_simple_product(w)}};
}

void cmd_dw(const Common& c, const std::string& w, std::ostream& os) {
  if (!w.empty()) {
    print_json(os, dw_row(element(c, w)));
    return;
  }
  const auto elems = all_elements(shape_of(c));
  auto rows = parallel_map(elems.size(), c.jobs, [&](std::size_t i) { return dw_row(elems[i]); });
  if (fmt(c, "json") == "csv") {
    os << "w,length,d,fixed_space_dim,distinct_simple\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      os << elems[i].to_string() << ',' << rows[i]["length"] << ',' << rows[i]["d"] << ','
         << rows[i]["fixed_space_dim"] << ',' << (rows[i]["distinct_simple"].get<bool>() ? "true" : "false") << '\n';
  } else {
    print_json(os, Json(rows));
  }
}

Json companions_for_place(const Json& place, const std::string& wx_flag, bool all_refinements) {
  auto p = param_from_json(place);
  validate_generic(p);
  if (all_refinements) {
    std::map<Refinement, WeylElement> table;
    if (!place.contains("wx_by_refinement")) throw ParseError("--all-refinements needs \"wx_by_refinement\"");
    for (auto& [k, v] : place["wx_by_refinement"].items())
      table.emplace(Permutation::parse(k), weyl_from_json(v, p.shape));
    Json arr = Json::array();
    for (const auto& rp : all_points_over(p, table)) {
      Json o = to_json(rp.point);
      o["refinement"] = to_json(rp.refinement);
      arr.push_back(o);
    }
    return arr;
  }
  WeylElement wx;
  if (!wx_flag.empty()) {
    wx = WeylElement::parse(p.shape, wx_flag);
  } else if (place.contains("wx")) {
    wx = weyl_from_json(place["wx"], p.shape);
  } else if (place.contains("refinement_flag") && place.contains("hodge_flag")) {
    wx = wx_from_flags(p, flag_from_json(place["refinement_flag"]), flag_from_json(place["hodge_flag"]));
  } else {
    throw ParseError("companions needs --wx, \"wx\", or the two flags");
  }
  Json arr = Json::array();
  for (const auto& pt : companion_set(p, wx)) arr.push_back(to_json(pt));
  return arr;
}

void cmd_companions(const std::string& path, const std::string& wx, bool all_refinements, std::ostream& os) {
  const Json j = read_json_file(path);
  if (!j.contains("places")) {
    print_json(os, companions_for_place(j, wx, all_refinements));
    return;
  }
  // Multi-place parameters: the product of the per-place companion sets.
  std::vector<Json> per_place;
  for (const auto& place : j["places"]) per_place.push_back(companions_for_place(place, "", all_refinements));
  Json combos = Json::array({Json::array()});
  for (const auto& pts : per_place) {
    Json next = Json::array();
    for (const auto& prefix : combos)
      for (const auto& pt : pts) {
        Json t = prefix;
        t.push_back(pt);
        next.push_back(t);
      }
    combos = next;
  }
  print_json(os, combos);
}

void cmd_cycle(const Common& c, const std::string& simple, const std::string& verma,
               const std::vector<std::string>& fiber, const std::vector<std::string>& bm,
               bool steinberg, std::ostream& os) {
  const auto shape = shape_of(c);
  if (steinberg) {
    Json arr = Json::array();
    for (const auto& s : steinberg_basis(shape)) arr.push_back(Json{{"w", cycle_key(s.w)}, {"dimension", s.dimension}});
    print_json(os, arr);
    return;
  }
  const auto a = load_amatrix(c);
  if (!simple.empty()) {
    print_json(os, to_json(simple_cycle(element(c, simple), a)));
  } else if (!verma.empty()) {
    print_json(os, to_json(verma_cycle(element(c, verma), a)));
  } else if (fiber.size() == 2) {
    print_json(os, to_json(fiber_cycle(element(c, fiber[0]), element(c, fiber[1]), a)));
  } else if (bm.size() == 2) {
    print_json(os, to_json(breuil_mezard_decomposition(element(c, bm[0]), element(c, bm[1]), a)));
  } else {
    throw ParseError("cycle needs one of --simple, --verma, --fiber W WX, --bm W WX, --steinberg");
  }
}

void cmd_tangent(const Common& c, const std::string& w, const std::string& wx, bool table, std::ostream& os) {
  const auto ww = element(c, w);
  if (table) {
    auto rows = tangent_table(ww);
    if (fmt(c, "csv") == "csv") {
      os << "w,v,dim_cell,tangent_dim,smooth\n";
      for (const auto& r : rows)
        os << r.w.to_string() << ',' << r.v.to_string() << ',' << r.dim_cell << ',' << r.tangent_dim << ','
           << (r.smooth ? "true" : "false") << '\n';
    } else {
      Json arr = Json::array();
      for (const auto& r : rows)
        arr.push_back(Json{{"w", to_json(r.w)}, {"v", to_json(r.v)}, {"dim_cell", r.dim_cell},
                           {"tangent_dim", r.tangent_dim}, {"smooth", r.smooth}});
      print_json(os, arr);
    }
    return;
  }
  if (wx.empty()) throw ParseError("tangent needs --wx, or --table");
  print_json(os, to_json(trianguline_tangent_report(ww, element(c, wx))));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local models of trianguline varieties: Weyl combinatorics, KL, cycles, companions"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Common common;
  std::string x, y, w, wx, wp, wy, upper, param, simple, verma, suite;
  std::vector<std::string> fiber, bm;
  bool table = false, all_refinements = false, steinberg = false;
  long long m = 1;
  int trials = 100, samples = 0;

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,y}");
  add_common(kl, common);
  kl->add_option("--x", x);
  kl->add_option("--y", y);
  kl->add_flag("--table", table, "every pair x <= y");

  auto* br = app.add_subcommand("bruhat", "Bruhat comparison and upper intervals");
  add_common(br, common);
  br->add_option("--x", x);
  br->add_option("--y", y);
  br->add_option("--upper", upper, "list {w' : w <= w'}");

  auto* dw = app.add_subcommand("dw", "d_w, cycle counts and distinct-simple test");
  add_common(dw, common);
  dw->add_option("--w", w, "omit for a full table");

  auto* comp = app.add_subcommand("companions", "companion points of a crystalline parameter");
  add_common(comp, common, false);
  comp->add_option("param", param, "CrystallineParam JSON file")->required();
  comp->add_option("--wx", wx);
  comp->add_flag("--all-refinements", all_refinements);

  auto* cyc = app.add_subcommand("cycle", "cycles on the Steinberg components");
  add_common(cyc, common);
  cyc->add_option("--simple", simple);
  cyc->add_option("--verma", verma);
  cyc->add_option("--fiber", fiber, "W WX")->expected(2);
  cyc->add_option("--bm", bm, "W WX")->expected(2);
  cyc->add_flag("--steinberg", steinberg, "list the basis [Z_w] with dimensions");

  auto* mult = app.add_subcommand("multiplicity", "P_{w0 w, w0 w'}(1)");
  add_common(mult, common);
  mult->add_option("--w", w)->required();
  mult->add_option("--wp", wp)->required();

  auto* tan = app.add_subcommand("tangent", "tangent bounds and Schubert tangent tables");
  add_common(tan, common);
  tan->add_option("--w", w)->required();
  tan->add_option("--wx", wx);
  tan->add_flag("--table", table);

  auto* sing = app.add_subcommand("singular", "singularity criterion at w_x");
  add_common(sing, common);
  sing->add_option("--wx", wx)->required();

  auto* rep = app.add_subcommand("replay", "replay the descending companion-point induction");
  add_common(rep, common);
  rep->add_option("--wy", wy)->required();
  rep->add_option("--m", m)->check(CLI::PositiveNumber);

  auto* probe = app.add_subcommand("probe", "degeneration probe of the intersection conjecture");
  add_common(probe, common);
  probe->add_option("--w", w)->required();
  probe->add_option("--wp", wp)->required();
  probe->add_option("--trials", trials)->check(CLI::NonNegativeNumber);

  auto* check = app.add_subcommand("check", "run a named self-check suite");
  add_common(check, common, false);
  check->add_option("--suite", suite)->required();
  check->add_option("--samples", samples);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buf;
  int code = kOk;
  try {
    if (kl->parsed()) {
      cmd_kl(common, x, y, table, buf);
    } else if (br->parsed()) {
      cmd_bruhat(common, x, y, upper, buf);
    } else if (dw->parsed()) {
      cmd_dw(common, w, buf);
    } else if (comp->parsed()) {
      cmd_companions(param, wx, all_refinements, buf);
    } else if (cyc->parsed()) {
      cmd_cycle(common, simple, verma, fiber, bm, steinberg, buf);
    } else if (mult->parsed()) {
      long long v = pi_multiplicity(element(common, w), element(common, wp));
      if (fmt(common, "text") == "json")
        print_json(buf, Json{{"w", to_json(element(common, w))}, {"wp", to_json(element(common, wp))}, {"multiplicity", v}});
      else
        buf << v << '\n';
    } else if (tan->parsed()) {
      cmd_tangent(common, w, wx, table, buf);
    } else if (sing->parsed()) {
      bool s = singularity_verdict(element(common, wx));
      if (fmt(common, "text") == "json")
        print_json(buf, Json{{"wx", to_json(element(common, wx))}, {"verdict", s ? "singular" : "not-detected"}});
      else
        buf << (s ? "singular" : "not-detected") << '\n';
    } else if (rep->parsed()) {
      auto r = replay_companion_induction(element(common, wy), m, load_amatrix(common));
      print_json(buf, to_json(r));
      if (!r.success) code = kSuiteFailure;
    } else if (probe->parsed()) {
      print_json(buf, to_json(probe_conjecture(element(common, w), element(common, wp), trials, common.seed)));
    } else if (check->parsed()) {
      SuiteOptions opt{common.n, samples, common.seed, common.jobs};
      code = run_suite(suite, opt, buf, err);
    }
  } catch (const GenericityViolation& e) {
    err << Json{{"error", "genericity"}, {"i", e.i() + 1}, {"j", e.j() + 1}, {"ratio", e.ratio()}}.dump() << '\n';
    return kGenericity;
  } catch (const AMatrixGuard& e) {
    err << Json{{"error", "a-matrix-guard"}, {"message", e.what()}}.dump() << '\n';
    return kAMatrixGuard;
  } catch (const IdentityFailure& e) {
    err << Json{{"error", "identity-failure"}, {"message", e.what()}}.dump() << '\n';
    return kSuiteFailure;
  } catch (const Error& e) {
    err << Json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << Json{{"error", "parse"}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  }

  if (!common.out.empty()) {
    std::ofstream f(common.out);
    if (!f) {
      err << "cannot write '" << common.out << "'\n";
      return kUsage;
    }
    f << buf.str();
  } else {
    out << buf.str();
  }
  return code;
}

}  // namespace trilocal::cli
