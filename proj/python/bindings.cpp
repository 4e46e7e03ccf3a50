#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "trilocal/cartan.hpp"
#include "trilocal/companion.hpp"
#include "trilocal/cycles.hpp"
#include "trilocal/errors.hpp"
#include "trilocal/flags.hpp"
#include "trilocal/kl.hpp"
#include "trilocal/schubert.hpp"
#include "trilocal/serialize.hpp"

namespace py = pybind11;
using namespace trilocal;

namespace {

// "312" -> S_3, "21.12" -> S_2 x S_2, "10,9,...,1" -> S_10.
EmbeddingShape shape_of(const std::string& text) {
  int sigma = 1, n = 0;
  for (char c : text) sigma += c == '.';
  const auto first = text.substr(0, text.find('.'));
  if (first.find(',') != std::string::npos)
    n = 1 + static_cast<int>(std::count(first.begin(), first.end(), ','));
  else
    n = static_cast<int>(first.size());
  return EmbeddingShape(n, sigma);
}

WeylElement el(const std::string& text) { return WeylElement::parse(shape_of(text), text); }

WeylElement el_like(const std::string& text, const WeylElement& other) {
  return WeylElement::parse(other.shape(), text);
}

std::vector<std::string> names(const std::vector<WeylElement>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

std::map<std::string, long long> cycle_dict(const Cycle& c) {
  std::map<std::string, long long> out;
  for (const auto& [w, k] : c.terms()) out[w.to_string()] = k;
  return out;
}

RationalMatrix to_matrix(const std::vector<std::vector<py::object>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw ShapeMismatch("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = parse_rational(py::str(rows[i][j]).cast<std::string>());
  }
  return m;
}

Flag to_flag(const std::vector<std::vector<std::vector<py::object>>>& blocks) {
  std::vector<RationalMatrix> b;
  for (const auto& m : blocks) b.push_back(to_matrix(m));
  return Flag(std::move(b));
}

// Python hands dicts back and forth as JSON text to reuse the serializers.
py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_trilocal, m) {
  m.doc() = R"pbdoc(
    Weyl group combinatorics, local models and companion points for Res GL_n.

    Weyl elements are strings in one-line notation, one part per embedding
    joined by '.', e.g. "312" or "21.12".
  )pbdoc";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<GenericityViolation>(m, "GenericityViolation", base.ptr());
  py::register_exception<AMatrixGuard>(m, "AMatrixGuard", base.ptr());
  py::register_exception<IdentityFailure>(m, "IdentityFailure", base.ptr());

  m.def("length", [](const std::string& w) { return el(w).length(); }, py::arg("w"));
  m.def("bruhat_leq",
        [](const std::string& x, const std::string& y) {
          auto a = el(x);
          return bruhat_leq(a, el_like(y, a));
        },
        py::arg("x"), py::arg("y"), R"pbdoc(True when x <= y in the Bruhat order.)pbdoc");
  m.def("upper_interval", [](const std::string& w) { return names(upper_interval(el(w))); }, py::arg("w"));
  m.def("all_elements", [](int n, int sigma) { return names(all_elements(EmbeddingShape(n, sigma))); },
        py::arg("n"), py::arg("sigma") = 1, R"pbdoc(All elements in canonical order.)pbdoc");

  m.def("kl_polynomial",
        [](const std::string& x, const std::string& y) {
          auto a = el(x);
          return kl_polynomial(a, el_like(y, a)).coeffs();
        },
        py::arg("x"), py::arg("y"), R"pbdoc(
    Coefficients of P_{x,y}, constant term first. Empty when x is not below y.
  )pbdoc");
  m.def("verma_multiplicity",
        [](const std::string& w, const std::string& wp) {
          auto a = el(w);
          return verma_multiplicity(a, el_like(wp, a));
        },
        py::arg("w"), py::arg("wp"));

  m.def("d", [](const std::string& w) { return d_of(el(w)); }, py::arg("w"),
        R"pbdoc(Rank of the lattice spanned by w(alpha) - alpha.)pbdoc");
  m.def("fixed_space_dim", [](const std::string& w) { return fixed_space_dim(el(w)); }, py::arg("w"));
  m.def("is_distinct_simple_product", [](const std::string& w) { return is_distinct_simple_product(el(w)); },
        py::arg("w"));

  m.def("relative_position",
        [](const std::vector<std::vector<std::vector<py::object>>>& f1,
           const std::vector<std::vector<std::vector<py::object>>>& f2) {
          return relative_position(to_flag(f1), to_flag(f2)).to_string();
        },
        py::arg("f1"), py::arg("f2"), R"pbdoc(
    Relative position of two flags. Each flag is a list of square matrices
    (one per embedding) whose first i columns span the i-th subspace.
    Entries may be ints or strings such as "1/2".
  )pbdoc");

  m.def("schubert_tangent_dim",
        [](const std::string& w, const std::string& v) {
          auto a = el(w);
          return schubert_tangent_dim(a, el_like(v, a));
        },
        py::arg("w"), py::arg("v"));
  m.def("tangent_bound",
        [](const std::string& w, const std::string& wp) {
          auto a = el(w);
          return tangent_bound(a, el_like(wp, a));
        },
        py::arg("w"), py::arg("wp"));
  m.def("is_smooth_everywhere", [](const std::string& w) { return is_smooth_everywhere(el(w)); }, py::arg("w"));
  m.def("singularity_verdict", [](const std::string& wx) { return singularity_verdict(el(wx)); }, py::arg("wx"),
        R"pbdoc(True when the trianguline variety is forced to be singular at x.)pbdoc");

  m.def("fiber_cycle",
        [](const std::string& w, const std::string& wx) {
          auto a = el(w);
          return cycle_dict(fiber_cycle(a, el_like(wx, a), AMatrix(a.shape())));
        },
        py::arg("w"), py::arg("wx"), R"pbdoc(Fibre cycle with the identity a-matrix, as {element: coefficient}.)pbdoc");
  m.def("breuil_mezard_decomposition",
        [](const std::string& w, const std::string& wx) {
          auto a = el(w);
          std::map<std::string, std::pair<long long, std::map<std::string, long long>>> out;
          for (const auto& [v, t] : breuil_mezard_decomposition(a, el_like(wx, a), AMatrix(a.shape())))
            out[v.to_string()] = {t.multiplicity, cycle_dict(t.cycle)};
          return out;
        },
        py::arg("w"), py::arg("wx"));

  m.def("companion_set",
        [](const std::string& param_json, const std::string& wx) {
          auto p = param_from_json(Json::parse(param_json));
          Json arr = Json::array();
          for (const auto& pt : companion_set(p, WeylElement::parse(p.shape, wx))) arr.push_back(to_json(pt));
          return json_to_py(arr);
        },
        py::arg("param_json"), py::arg("wx"), R"pbdoc(
    Companion points for {w : w_x <= w}. param_json has keys n, sigma, h, phi, q.
  )pbdoc");

  m.def("replay",
        [](const std::string& wy, long long mult) {
          auto a = el(wy);
          return json_to_py(to_json(replay_companion_induction(a, mult, AMatrix(a.shape()))));
        },
        py::arg("wy"), py::arg("m") = 1);
  m.def("probe",
        [](const std::string& w, const std::string& wp, int trials, std::uint64_t seed) {
          auto a = el(w);
          return json_to_py(to_json(probe_conjecture(a, el_like(wp, a), trials, seed)));
        },
        py::arg("w"), py::arg("wp"), py::arg("trials") = 100, py::arg("seed") = 1);

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code;
          {
            py::gil_scoped_release release;
            code = cli::run_cli(args, out, err);
          }
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), R"pbdoc(Runs the command-line tool in process; returns (exit code, stdout, stderr).)pbdoc");

#ifdef TRILOCAL_VERSION
  m.attr("__version__") = TRILOCAL_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
