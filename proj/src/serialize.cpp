#include "trilocal/serialize.hpp"

#include "trilocal/errors.hpp"

namespace trilocal {

Json to_json(const Permutation& p) { return Json(p.one_line()); }

Json to_json(const WeylElement& w) {
  Json a = Json::array();
  for (const auto& p : w.parts()) a.push_back(to_json(p));
  return a;
}

Json to_json(const Rational& r) { return format_rational(r); }

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Flag& f) {
  Json a = Json::array();
  for (const auto& b : f.blocks) a.push_back(to_json(b));
  return a;
}

Json to_json(const KLPolynomial& p) { return Json(p.coeffs()); }

Json to_json(const Cycle& c) {
  Json o = Json::object();
  for (const auto& [w, x] : c.terms()) o[cycle_key(w)] = x;
  return o;
}

Json to_json(const Character& c) {
  return Json{{"weights", c.weights},
              {"unr", format_rational(c.unr)},
              {"eps_power", c.eps_power},
              {"modulus_power", c.modulus_power}};
}

Json to_json(const CompanionPoint& p) {
  Json chars = Json::array();
  for (const auto& c : p.characters) chars.push_back(to_json(c));
  return Json{{"w", to_json(p.w)}, {"characters", chars}};
}

Json to_json(const ProbeReport& r) {
  Json o{{"w", to_json(r.w)}, {"wp", to_json(r.wp)}, {"trials", r.trials}};
  o["exact_verdict"] = r.exact_equality ? Json(*r.exact_equality ? "equality" : "strict") : Json(nullptr);
  o["found"] = r.found;
  o["not_found"] = r.not_found;
  return o;
}

Json to_json(const TriangulineTangentReport& r) {
  Json o{{"w", to_json(r.w)},
         {"wx", to_json(r.wx)},
         {"dim_group", r.dim_group},
         {"tangent_bound", r.tangent_bound},
         {"delta_bound", r.delta_bound}};
  o["specialized_bound"] = r.specialized_bound ? Json(*r.specialized_bound) : Json(nullptr);
  o["schubert_smooth_at_point"] = r.schubert_smooth_at_point;
  o["tri_smooth_iff_schubert_smooth"] = r.tri_smooth_iff_schubert_smooth;
  return o;
}

Json to_json(const ReplayResult& r) {
  Json trace = Json::array();
  for (const auto& s : r.trace) {
    Json used = Json::array();
    for (const auto& u : s.used) used.push_back(cycle_key(u));
    trace.push_back(Json{{"rule", s.rule}, {"w", cycle_key(s.w)}, {"used", used}, {"detail", s.detail}});
  }
  Json o{{"success", r.success}, {"wy", cycle_key(r.wy)}, {"m", r.m}, {"trace", trace}};
  if (r.success) {
    Json cycles = Json::object();
    for (const auto& [w, c] : r.cycles) cycles[cycle_key(w)] = to_json(c);
    o["cycles"] = cycles;
  } else {
    o["failed_at"] = r.failed_at ? Json(cycle_key(*r.failed_at)) : Json(nullptr);
    o["failure"] = r.failure;
  }
  return o;
}

Json to_json(const std::map<WeylElement, BMTerm>& bm) {
  Json o = Json::object();
  for (const auto& [w, t] : bm) o[cycle_key(w)] = Json{{"multiplicity", t.multiplicity}, {"cycle", to_json(t.cycle)}};
  return o;
}

Permutation permutation_from_json(const Json& j) {
  if (j.is_string()) return Permutation::parse(j.get<std::string>());
  if (!j.is_array()) throw ParseError("permutation must be an array or string");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("permutation entries must be integers");
    v.push_back(x.get<int>());
  }
  return Permutation::from_one_line(v);
}

WeylElement weyl_from_json(const Json& j, const EmbeddingShape& shape) {
  if (j.is_string()) return WeylElement::parse(shape, j.get<std::string>());
  if (!j.is_array() || j.empty()) throw ParseError("Weyl element must be a non-empty array");
  std::vector<Permutation> parts;
  if (j[0].is_number_integer()) {
    parts.push_back(permutation_from_json(j));
  } else {
    for (const auto& p : j) parts.push_back(permutation_from_json(p));
  }
  if (static_cast<int>(parts.size()) != shape.sigma) throw ParseError("Weyl element has the wrong number of parts");
  for (const auto& p : parts)
    if (p.size() != shape.n) throw ParseError("Weyl element part has the wrong size");
  return WeylElement(shape, std::move(parts));
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw ParseError("rational must be a \"p/q\" string or an integer");
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix must be an array of rows");
  RationalMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw ParseError("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = rational_from_json(j[i][c]);
  }
  return m;
}

Flag flag_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("flag must be an array of matrices");
  std::vector<RationalMatrix> b;
  if (j[0].is_array() && !j[0].empty() && !j[0][0].is_array()) {
    b.push_back(matrix_from_json(j));
  } else {
    for (const auto& m : j) b.push_back(matrix_from_json(m));
  }
  return Flag(std::move(b));
}

CrystallineParam param_from_json(const Json& j) {
  try {
    CrystallineParam p;
    p.shape = EmbeddingShape(j.at("n").get<int>(), j.value("sigma", 1));
    p.h.rows = j.at("h").get<std::vector<std::vector<long long>>>();
    for (const auto& f : j.at("phi")) p.phi.push_back(rational_from_json(f));
    p.q = rational_from_json(j.at("q"));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("crystalline parameter: ") + e.what());
  }
}

AMatrix amatrix_from_json(const Json& j, const EmbeddingShape& shape) {
  AMatrix a(shape);
  a.mark_user_supplied();
  try {
    for (const auto& e : j.at("entries"))
      a.set(weyl_from_json(e.at("w"), shape), weyl_from_json(e.at("wp"), shape), e.at("value").get<long long>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("a-matrix: ") + e.what());
  }
  return a;
}

}  // namespace trilocal
