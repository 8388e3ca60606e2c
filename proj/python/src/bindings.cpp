// Thin bindings: every entry point returns the same JSON document the CLI
// prints, as a string; the Python package parses it.

#include "spinrep/error.hpp"
#include "spinrep/report.hpp"
#include "spinrep/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace spinrep;

namespace {

Budget budget(std::uint64_t weyl, std::size_t terms) {
  Budget b;
  b.weyl_order = weyl;
  b.terms = terms;
  return b;
}

Weight dominant(const RootSystem& rs, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != rs.rank())
    throw InvalidArgument(rs.label() + " needs " + std::to_string(rs.rank()) + " labels");
  for (int l : labels)
    if (l < 0) throw InvalidArgument("labels must be non-negative");
  return rs.weight(labels);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Spin module computations";
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_AssertionError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  const Budget d;
  m.def(
      "spin_report",
      [](const std::string& type, const std::vector<int>& labels, bool with_dual, std::uint64_t weyl,
         std::size_t terms) {
        auto rs = RootSystem::parse(type);
        py::gil_scoped_release release;
        return spin_report(rs, dominant(*rs, labels), with_dual, budget(weyl, terms)).dump();
      },
      py::arg("type"), py::arg("labels"), py::arg("with_dual") = false, py::arg("weyl_budget") = d.weyl_order,
      py::arg("term_budget") = d.terms);
  m.def(
      "poincare",
      [](const std::string& type, const std::vector<int>& labels, bool with_dual, std::uint64_t weyl,
         std::size_t terms) {
        auto rs = RootSystem::parse(type);
        const Weight lambda = dominant(*rs, labels);
        py::gil_scoped_release release;
        const Budget b = budget(weyl, terms);
        const Subsystem g = Subsystem::full(rs);
        WeightSystem ws = WeightSystem::of_module(g, lambda, b);
        if (with_dual) ws = ws.direct_sum(WeightSystem::from_character(ws.to_character().dual()));
        return to_json(invariant_poincare(ws, g, b)).dump();
      },
      py::arg("type"), py::arg("labels"), py::arg("with_dual") = false, py::arg("weyl_budget") = d.weyl_order,
      py::arg("term_budget") = d.terms);
  m.def(
      "classify",
      [](int rank_bound, int height_bound, int jobs, std::uint64_t weyl, std::size_t terms) {
        py::gil_scoped_release release;
        return to_json(classify_coprimary(rank_bound, height_bound, budget(weyl, terms), jobs)).dump();
      },
      py::arg("rank_bound"), py::arg("height_bound"), py::arg("jobs") = 1, py::arg("weyl_budget") = d.weyl_order,
      py::arg("term_budget") = d.terms);
  m.def(
      "rootsys", [](const std::string& type) { return rootsys_report(RootSystem::parse(type)).dump(); },
      py::arg("type"));
  m.def(
      "grading",
      [](const std::string& name, std::uint64_t weyl, std::size_t terms) {
        py::gil_scoped_release release;
        return grading_report(grading_by_name(name), budget(weyl, terms)).dump();
      },
      py::arg("name"), py::arg("weyl_budget") = d.weyl_order, py::arg("term_budget") = d.terms);
  m.def("grading_names", [] {
    std::vector<std::string> out;
    for (const auto& g : inner_catalog(4)) out.push_back(g.name);
    for (const auto& g : outer_catalog()) out.push_back(g.name);
    return out;
  });
  m.def("suite_names", [] { return suite_names(); });
  m.def(
      "run_suite",
      [](const std::string& name, int jobs, std::uint64_t weyl, std::size_t terms) {
        py::gil_scoped_release release;
        return to_json(run_suite(name, RunConfig{budget(weyl, terms), jobs})).dump();
      },
      py::arg("name"), py::arg("jobs") = 1, py::arg("weyl_budget") = d.weyl_order, py::arg("term_budget") = d.terms);
}
