#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "crsym/fields.hpp"
#include "crsym/kostant.hpp"

namespace py = pybind11;
using namespace crsym;

namespace {

std::vector<int> signs(const std::string& eps) { return eps.empty() ? std::vector<int>{} : parse_signs(eps); }

py::dict bounds_dict(int n, int k) {
  BoundsTable t = bounds(n, k);
  py::dict d;
  d["max"] = t.max_dim;
  d["submax"] = t.submax_dim;
  d["universal"] = t.universal_bound;
  d["stability_group"] = t.stability_group;
  d["complex_annihilator_bound"] = t.complex_annihilator_bound;
  d["definite_annihilator_bound"] = t.definite_annihilator_bound;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact CR symmetry and parabolic geometry computations";
  m.attr("__version__") = cli::kVersion;

  py::register_exception<std::invalid_argument>(m, "DomainError", PyExc_ValueError);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        cli::Outcome out;
        {
          py::gil_scoped_release nogil;
          out = cli::run(args);
        }
        return py::make_tuple(out.code, out.report.is_null() ? std::string() : out.report.dump(), out.help);
      },
      py::arg("args"), "Run a command; returns (exit code, JSON report text, help text).");

  m.def(
      "catalog",
      [](const std::string& family, int n, const std::string& eps) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& f : builtin_symmetries(parse_family(family), n, signs(eps))) out.emplace_back(f.label, f.field.str());
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("eps") = "");

  m.def(
      "all_tangent",
      [](const std::string& family, int n, const std::string& eps) {
        Family f = parse_family(family);
        HypersurfaceModel model = builtin_model(f, n, signs(eps));
        for (const auto& lf : builtin_symmetries(f, n, signs(eps)))
          if (!is_zero(tangency_residual(model, lf.field))) return false;
        return true;
      },
      py::arg("family"), py::arg("n"), py::arg("eps") = "");

  m.def(
      "solve_dimension",
      [](const std::string& family, int n, int degree, const std::string& eps) {
        py::gil_scoped_release nogil;
        return solve_symmetries(builtin_model(parse_family(family), n, signs(eps)), degree).dimension;
      },
      py::arg("family"), py::arg("n"), py::arg("degree"), py::arg("eps") = "");

  m.def(
      "levi_signature",
      [](const std::string& family, int n, const std::string& eps) {
        LeviSignature s = levi_signature(builtin_model(parse_family(family), n, signs(eps)));
        return py::make_tuple(s.pos, s.neg, s.null);
      },
      py::arg("family"), py::arg("n"), py::arg("eps") = "");

  m.def(
      "graded_dims",
      [](int p, int q) {
        GradedSU G = graded_su(p, q);
        std::vector<int> d;
        for (int k = -2; k <= 2; ++k) d.push_back(G.real.dim(k));
        return d;
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "hasse_words",
      [](int l) {
        py::list out;
        for (const auto& c : hasse_weight2(l)) {
          py::dict d;
          d["word"] = c.word;
          d["marks"] = c.marks;
          d["partner"] = c.partner;
          d["homogeneity"] = c.homogeneity;
          out.append(d);
        }
        return out;
      },
      py::arg("rank"));

  m.def("satake_diagram", [](int k, int n) { return render_diagram(satake(k, n)); }, py::arg("k"), py::arg("n"));
  m.def("bounds", &bounds_dict, py::arg("n"), py::arg("k"));
}
