#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vk/gauss_code.hpp"
#include "vk/json_io.hpp"

namespace py = pybind11;
using namespace vk;

namespace {

py::object json_to_py(const ordered_json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_vkcore, mod) {
  mod.doc() = "Gauss-diagram engine for virtual knot and link invariants";

  py::class_<GaussDiagram>(mod, "GaussDiagram")
      .def(py::init([](const std::string& code) { return parse_gauss_code(code); }),
           py::arg("code"))
      .def_property_readonly("components", &GaussDiagram::component_count)
      .def_property_readonly("chords", [](const GaussDiagram& d) {
        return static_cast<int>(d.chord_count());
      })
      .def("chord_ids", &GaussDiagram::chord_ids)
      .def("sign", &GaussDiagram::sign, py::arg("chord"))
      .def("crossing_change", &GaussDiagram::crossing_change, py::arg("chord"))
      .def("virtualize", &GaussDiagram::virtualize, py::arg("chord"))
      .def("canonical", [](const GaussDiagram& d) { return canonical_code(d); })
      .def("code", [](const GaussDiagram& d) { return raw_code(d); })
      .def("__repr__", [](const GaussDiagram& d) {
        return "GaussDiagram(\"" + raw_code(d) + "\")";
      })
      .def("__eq__", [](const GaussDiagram& a, const GaussDiagram& b) {
        return isomorphic(a, b);
      });

  mod.def("parse", &parse_gauss_code, py::arg("code"));
  mod.def("serialize", &serialize, py::arg("diagram"));
  mod.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));

  mod.def(
      "index", [](const GaussDiagram& d, int chord) { return index(d, chord); },
      py::arg("diagram"), py::arg("chord"));
  mod.def(
      "index_by_linking",
      [](const GaussDiagram& d, int chord) { return index_by_linking(d, chord); },
      py::arg("diagram"), py::arg("chord"));
  mod.def("writhe_vector", [](const GaussDiagram& d) {
    std::map<int, int> out = writhe_vector(d).entries;
    return out;
  });
  mod.def("affine_index_polynomial", [](const GaussDiagram& d) {
    std::map<int, long long> out = affine_index_polynomial(d).coeffs;
    return out;
  });
  mod.def("lower_bound", [](const GaussDiagram& d) {
    UnknottingIndex u = d.component_count() >= 2 ? lower_bound_link(d)
                                                 : lower_bound_knot(d);
    return std::make_pair(u.virtualizations, u.changes);
  });
  mod.def("span", [](const GaussDiagram& d) { return span_total(d).total; });
  mod.def("ell", [](const GaussDiagram& d) { return ell_invariant(d).total; });
  mod.def("minimal_crossing_check", [](const GaussDiagram& d) {
    auto mc = minimal_crossing_check(d);
    py::dict out;
    out["minimal"] = mc.minimal;
    if (mc.crossing_number) out["crossing_number"] = *mc.crossing_number;
    return out;
  });
  mod.def("invariants", [](const GaussDiagram& d) { return json_to_py(invariants_report(d)); });

  mod.def("is_trivial", [](const GaussDiagram& d) {
    return is_trivial(d).status == Triviality::Yes;
  });
  mod.def("greedy_simplify", [](const GaussDiagram& d) {
    return greedy_simplify(d).final;
  });

  mod.def(
      "family",
      [](const std::string& name, int m, int p, int n, int q, int r, int t, int k) {
        auto kind = family_from_name(name);
        if (!kind) throw std::invalid_argument("unknown family: " + name);
        FamilySpec spec;
        spec.kind = *kind;
        spec.m = m;
        spec.p = p;
        spec.n = n;
        spec.q = q;
        spec.r = r;
        spec.t = t;
        spec.k = k;
        FamilyDiagram fd = generate(spec);
        py::dict out;
        out["diagram"] = fd.diagram;
        out["code"] = raw_code(fd.diagram);
        out["profile"] = json_to_py(profile_to_json(fd.profile));
        return out;
      },
      py::arg("name"), py::arg("m") = 0, py::arg("p") = 0, py::arg("n") = 0,
      py::arg("q") = 0, py::arg("r") = 0, py::arg("t") = 0, py::arg("k") = 0);

  mod.def(
      "search",
      [](const GaussDiagram& d, int max_n, int max_m) {
        SearchOptions opts;
        opts.max_virtualizations = max_n;
        opts.max_changes = max_m;
        SearchResult r = search_min(d, opts);
        py::dict out;
        out["lower"] = std::make_pair(r.interval.lower.virtualizations,
                                      r.interval.lower.changes);
        if (r.interval.upper)
          out["upper"] = std::make_pair(r.interval.upper->virtualizations,
                                        r.interval.upper->changes);
        else
          out["upper"] = py::none();
        out["cap_exceeded"] = r.cap_exceeded;
        return out;
      },
      py::arg("diagram"), py::arg("max_n") = -1, py::arg("max_m") = -1);

  mod.def(
      "verify_theorem",
      [](const std::string& name, int m, int p, int n, int q, int r, int t, int k) {
        auto kind = family_from_name(name);
        if (!kind) throw std::invalid_argument("unknown family: " + name);
        FamilySpec spec;
        spec.kind = *kind;
        spec.m = m;
        spec.p = p;
        spec.n = n;
        spec.q = q;
        spec.r = r;
        spec.t = t;
        spec.k = k;
        return json_to_py(theorem_report_to_json(verify_theorem(spec)));
      },
      py::arg("name"), py::arg("m") = 0, py::arg("p") = 0, py::arg("n") = 0,
      py::arg("q") = 0, py::arg("r") = 0, py::arg("t") = 0, py::arg("k") = 0);
}
