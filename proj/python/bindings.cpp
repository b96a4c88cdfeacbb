#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cutplan/cli/app.hpp"
#include "cutplan/cli/cache.hpp"
#include "cutplan/cli/document.hpp"
#include "cutplan/error.hpp"
#include "cutplan/oracle.hpp"
#include "cutplan/planner.hpp"
#include "cutplan/simplex.hpp"
#include "cutplan/structure.hpp"

namespace py = pybind11;
using namespace cutplan;

namespace {

// Rationals cross the boundary as fractions.Fraction.
py::object to_py(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_fraction_string(value));
}

py::object to_py(const BigInt& value) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(value.str().c_str(), nullptr, 10));
}

Rational from_py(const py::handle& value) {
  return parse_fraction(py::str(value).cast<std::string>());
}

std::vector<Rational> vector_from_py(const py::sequence& values) {
  std::vector<Rational> out;
  for (auto v : values) out.push_back(from_py(v));
  return out;
}

py::list list_to_py(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Optimal component test plans via exact linear programming";

  static py::handle error_type = py::exception<Error>(m, "CutplanError", PyExc_RuntimeError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, ("[" + e.name() + "] " + e.what()).c_str());
    }
  });

  py::class_<CutsetMatrix>(m, "CutsetMatrix")
      .def(py::init(&CutsetMatrix::from_sets), py::arg("component_count"), py::arg("sets"))
      .def_property_readonly("component_count", &CutsetMatrix::component_count)
      .def_property_readonly("cutset_count", &CutsetMatrix::cutset_count)
      .def_property_readonly("rows", &CutsetMatrix::rows)
      .def("incidence", &CutsetMatrix::incidence)
      .def("irrelevant_components", &CutsetMatrix::irrelevant_components)
      .def("canonical_string", &CutsetMatrix::canonical_string)
      .def_property_readonly("structure_hash", &cli::structure_hash)
      .def("__eq__", [](const CutsetMatrix& a, const CutsetMatrix& b) { return a == b; })
      .def("__repr__", [](const CutsetMatrix& c) {
        return "CutsetMatrix(" + c.canonical_string() + ")";
      });

  m.def("minimal_cutsets_from_truth_table",
        [](std::vector<std::string> names, std::vector<std::uint8_t> failed) {
          return minimal_cutsets(SystemStructure(std::move(names), TruthTable{std::move(failed)}));
        },
        py::arg("component_names"), py::arg("failed"),
        "failed[x] is phi for the state whose bit j marks component j failed.");
  m.def("load_document",
        [](const std::string& text) {
          const auto doc = cli::parse_document(text);
          const auto structure = doc.to_structure();
          return py::make_tuple(structure.component_names(), minimal_cutsets(structure));
        },
        py::arg("json_text"), "Parses a structure document: (component names, CutsetMatrix).");
  m.def("minimal_pathsets", &minimal_pathsets, py::arg("cutsets"));
  m.def("shortest_path_length", &shortest_path_length, py::arg("cutsets"));

  py::class_<FractionPlan>(m, "FractionPlan")
      .def_property_readonly("fractions",
                             [](const FractionPlan& p) { return list_to_py(p.fractions); })
      .def_property_readonly("cutset_fraction",
                             [](const FractionPlan& p) { return to_py(p.cutset_fraction); })
      .def_property_readonly("n_zero", [](const FractionPlan& p) { return to_py(p.n_zero); })
      .def_readonly("alternative_optima", &FractionPlan::alternative_optima);

  py::class_<IntegerPlan>(m, "IntegerPlan")
      .def_readonly("tests", &IntegerPlan::tests)
      .def_readonly("n_requested", &IntegerPlan::n_requested)
      .def_readonly("n_minus", &IntegerPlan::n_minus)
      .def_readonly("n_plus", &IntegerPlan::n_plus)
      .def_readonly("remainder", &IntegerPlan::remainder)
      .def_readonly("n_min", &IntegerPlan::n_min)
      .def_readonly("remainder_distributed", &IntegerPlan::remainder_distributed);

  m.def("optimize_fractions", &optimize_fractions, py::arg("cutsets"));
  m.def("find_n_zero",
        [](const py::sequence& fractions) { return to_py(find_n_zero(vector_from_py(fractions))); },
        py::arg("fractions"));
  m.def("integer_plan", &integer_plan, py::arg("plan"), py::arg("cutsets"),
        py::arg("n_requested"), py::arg("distribute_remainder") = false);
  m.def("confidence_bound",
        [](TestCount n_min, double alpha) { return confidence_bound(n_min, alpha).q_upper; },
        py::arg("n_min"), py::arg("alpha") = 0.05);
  m.def("cutset_n_min",
        [](const CutsetMatrix& c, const std::vector<TestCount>& tests) {
          return cutset_n_min(c, tests);
        },
        py::arg("cutsets"), py::arg("tests"));

  m.def("solve_lp",
        [](const py::sequence& cost, const py::sequence& matrix, const py::sequence& rhs) {
          LpProblem lp;
          lp.cost = vector_from_py(cost);
          for (auto row : matrix) lp.constraint_matrix.push_back(vector_from_py(row.cast<py::sequence>()));
          lp.rhs = vector_from_py(rhs);
          const auto solution = solve_lp(lp);
          py::dict out;
          out["status"] = to_string(solution.status);
          if (solution.status == LpStatus::kOptimal) {
            out["objective"] = to_py(solution.objective);
            out["variables"] = list_to_py(solution.variables);
            out["duals"] = list_to_py(solution.duals);
          }
          return out;
        },
        py::arg("cost"), py::arg("matrix"), py::arg("rhs"),
        "minimize cost.x subject to matrix.x >= rhs, x >= 0, exactly.");

  m.def("brute_force_n_min",
        [](const CutsetMatrix& c, TestCount n_total) {
          return oracle::brute_force_plan(c, n_total).best_n_min;
        },
        py::arg("cutsets"), py::arg("n_total"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the cutplan CLI in-process: (exit code, stdout, stderr).");
}
