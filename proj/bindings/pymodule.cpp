#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "milnorfiber/jsonio.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const mf::Json& j) {
  using mf::Json;
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

mf::PipelineResult run(const std::string& f, const std::string& g, bool curve_only) {
  mf::BiPoly pf = mf::parse_poly(f);
  mf::BiPoly pg;
  if (!g.empty()) pg = mf::parse_poly(g);
  if (g.empty() && !curve_only)
    throw mf::input_error("give g or pass curve_only=True");
  return mf::run_pipeline(pf, pg, curve_only);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Milnor-fiber invariants of f(x,y) + z*g(x,y) from the common embedded "
            "resolution of the plane curve pair (f, g)";

  py::register_exception<mf::input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<mf::internal_error>(m, "InternalError", PyExc_RuntimeError);

  m.def("parse_poly",
        [](const std::string& text) { return mf::print_poly(mf::parse_poly(text)); },
        py::arg("text"), "Parse a polynomial in x, y and return its canonical form.");

  m.def("invariants",
        [](const std::string& f, const std::string& g, bool curve_only) {
          return json_to_py(mf::invariants_to_json(run(f, g, curve_only)));
        },
        py::arg("f"), py::arg("g") = "", py::arg("curve_only") = false,
        "Full invariants record: graph, zeta, chi, classification, fiber data.");

  m.def("resolve",
        [](const std::string& f, const std::string& g, bool curve_only) {
          return json_to_py(mf::graph_to_json(run(f, g, curve_only).graph));
        },
        py::arg("f"), py::arg("g") = "", py::arg("curve_only") = false,
        "Decorated common embedded resolution graph.");

  m.def("zeta",
        [](const std::string& f, const std::string& g, bool curve_only) {
          return json_to_py(mf::zeta_to_json(run(f, g, curve_only).zeta));
        },
        py::arg("f"), py::arg("g") = "", py::arg("curve_only") = false,
        "Monodromy zeta function in factored form.");

  m.def("chi",
        [](const std::string& f, const std::string& g, bool curve_only) {
          return run(f, g, curve_only).chi;
        },
        py::arg("f"), py::arg("g") = "", py::arg("curve_only") = false,
        "Euler characteristic of the Milnor fiber.");

  m.def("classify",
        [](const std::string& f, const std::string& g) {
          auto r = run(f, g, false);
          return json_to_py(mf::classification_to_json(*r.cls));
        },
        py::arg("f"), py::arg("g"), "Homotopy-type classification of the fiber.");

  m.def("branches_json",
        [](const std::string& f, const std::string& g, bool curve_only) {
          return json_to_py(mf::branches_to_json(run(f, g, curve_only).expansion));
        },
        py::arg("f"), py::arg("g") = "", py::arg("curve_only") = false,
        "Branch and contact data in the documented file schema.");

  m.def("check_pair",
        [](const std::string& f, const std::string& g) {
          return json_to_py(
              mf::report_to_json(mf::consistency_report(mf::parse_poly(f), mf::parse_poly(g))));
        },
        py::arg("f"), py::arg("g"), "Run the consistency cross-check battery on a germ pair.");

  m.def("milnor_number",
        [](const std::string& f) { return mf::milnor_number(mf::parse_poly(f)); },
        py::arg("f"), "Milnor number via the resultant oracle.");

  m.def("intersection_multiplicity",
        [](const std::string& f, const std::string& g) {
          return mf::intersection_multiplicity_resultant(mf::parse_poly(f), mf::parse_poly(g));
        },
        py::arg("f"), py::arg("g"), "Intersection multiplicity i0(f, g) at the origin.");

  m.attr("__version__") = "0.1.0";
}
