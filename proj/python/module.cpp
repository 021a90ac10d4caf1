// Thin bindings: sextics cross the boundary as 7 complex coefficients in
// ascending powers, reports as the same JSON the CLI prints.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "superlim/bd_recovery.hpp"
#include "superlim/catalog.hpp"
#include "superlim/contraction.hpp"
#include "superlim/io.hpp"
#include "superlim/mobius.hpp"
#include "superlim/root_invariants.hpp"

namespace py = pybind11;
using namespace superlim;

namespace {

using Coeffs = std::array<cplx, 7>;
using Matrix = std::array<std::array<cplx, 2>, 2>;
using PyPoint = std::optional<cplx>;  // None is infinity

Sextic to_sextic(const Coeffs& c) { return make_sextic(c); }
Coeffs to_coeffs(const Sextic& q) { return q.coeffs; }
GL2Numeric to_gl2(const Matrix& m) { return {m[0][0], m[0][1], m[1][0], m[1][1]}; }
PyPoint to_py(const RiemannPoint& p) { return p.infinite ? PyPoint{} : PyPoint{p.value}; }
RiemannPoint from_py(const PyPoint& p) { return p ? RiemannPoint::finite(*p) : RiemannPoint::infinity(); }

std::vector<std::pair<PyPoint, int>> py_roots(const Coeffs& c, double radius) {
  RootOptions opts;
  opts.cluster_radius = radius;
  std::vector<std::pair<PyPoint, int>> out;
  for (const auto& r : roots(to_sextic(c), opts)) out.emplace_back(to_py(r.value), r.multiplicity);
  return out;
}

py::object loads(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_superlim, m) {
  m.doc() = "Covariant sextics of 3D second-order superintegrable systems and their contractions.";

  // SuperlimError carries the library's error tag in .kind.
  py::exception<Error>(m, "SuperlimError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::module_::import("superlim._superlim").attr("SuperlimError");
      py::object inst = type(std::string(e.what()));
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(type.ptr(), inst.ptr());
    }
  });

  m.def("systems", [] {
    std::vector<std::string> out;
    for (SystemId id : kAllSystems) out.emplace_back(name(id));
    return out;
  });
  m.def("class_label", [](const std::string& s) { return std::string(class_label(parse_system(s))); });
  m.def("covariant", [](const std::string& s, const Point3& x0) { return to_coeffs(covariant_at(parse_system(s), x0)); },
        py::arg("system"), py::arg("x0"));
  m.def("representative", [](const std::string& s) { return to_coeffs(representative(parse_system(s))); });
  m.def("potential", [](const std::string& s, const Params& p, const Point3& x) {
    return potential_eval(parse_system(s), p, x);
  });

  m.def("roots", &py_roots, py::arg("coeffs"), py::arg("radius") = RootOptions{}.cluster_radius,
        "Distinct roots with multiplicities; None stands for infinity.");
  m.def("from_roots", [](const std::vector<std::pair<PyPoint, int>>& rs, cplx lead) {
    std::vector<RootCluster> clusters;
    for (const auto& [p, k] : rs) clusters.push_back({from_py(p), k});
    return to_coeffs(from_roots(clusters, lead));
  }, py::arg("roots"), py::arg("lead") = cplx{1.0});
  m.def("act", [](const Matrix& mat, const Coeffs& c) { return to_coeffs(act(to_gl2(mat), to_sextic(c))); },
        py::arg("matrix"), py::arg("coeffs"));
  m.def("transform_root", [](const Matrix& mat, const PyPoint& p) { return to_py(transform_root(to_gl2(mat), from_py(p))); });
  m.def("rot_matrix", [](int axis, cplx t) {
    const GL2Numeric g = rot_matrix(axis, t);
    return Matrix{{{g.a, g.b}, {g.c, g.d}}};
  });

  m.def("classify", [](const Coeffs& c) { return classify(to_sextic(c)).str(); });
  m.def("cross_ratio", [](const PyPoint& a, const PyPoint& b, const PyPoint& c, const PyPoint& d) {
    return cross_ratio(from_py(a), from_py(b), from_py(c), from_py(d));
  });
  m.def("multi_ratio_search", [](const std::array<PyPoint, 6>& z) {
    std::array<RiemannPoint, 6> pts;
    for (std::size_t i = 0; i < 6; ++i) pts[i] = from_py(z[i]);
    const MultiRatioOutcome o = multi_ratio_search(pts);
    return py::dict(py::arg("satisfied") = o.satisfied, py::arg("orderings") = o.orderings,
                    py::arg("min_defect") = o.min_defect);
  });
  m.def("system_label", [](const std::string& s) { return system_label(parse_system(s)).str(); });
  m.def("catalog_label", [](const std::string& s) { return catalog_label(parse_system(s)).str(); });

  m.def("recover", [](const std::string& s, const std::optional<Point3>& x0) {
    const SystemId id = parse_system(s);
    return loads(to_json(recovery_report(id, x0.value_or(default_point(id)))));
  }, py::arg("system"), py::arg("x0") = py::none());

  m.def("contraction_names", [] {
    std::vector<std::string> out;
    for (const auto& spec : contraction_specs()) out.push_back(spec.name);
    return out;
  });
  m.def("contract", [](const std::string& n) { return loads(to_json(run_contraction(contraction_spec(n)))); });
  m.def("contract_all", [] {
    py::list out;
    for (const auto& rep : run_all()) out.append(loads(to_json(rep)));
    return out;
  });
  m.def("diagram_dot", &diagram_dot);
}
