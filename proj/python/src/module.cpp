#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pocopula/majorization.hpp"
#include "pocopula/repro.hpp"
#include "pocopula/runner.hpp"

namespace py = pybind11;
using namespace pocopula;

namespace {

// JSON crosses the boundary as text; the Python side wraps it with json.
py::object to_py(const Json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

Json from_py(const py::object& o) {
  py::object dumps = py::module_::import("json").attr("dumps");
  return Json::parse(dumps(o).cast<std::string>());
}

ShockedSystem model_from(const py::object& o) { return parse_model(from_py(o), "model"); }

std::optional<GridSpec> grid_from(const py::object& o) {
  if (o.is_none()) return std::nullopt;
  return parse_grid(from_py(o), "grid");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Series/parallel lifetimes under proportional odds with Archimedean survival copulas";

  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);

  py::class_<Generator>(m, "Generator")
      .def(py::init([](const std::string& name, const ParamMap& params) {
             return make_generator(name, params);
           }),
           py::arg("name"), py::arg("params") = ParamMap{})
      .def_property_readonly("name", &Generator::name)
      .def_property_readonly("params", &Generator::params)
      .def_property_readonly("domain_hint", &Generator::domain_hint)
      .def("phi", &Generator::phi)
      .def("dphi", &Generator::dphi)
      .def("d2phi", &Generator::d2phi)
      .def("derivative", &Generator::derivative, py::arg("k"), py::arg("t"))
      .def("phi_inv", &Generator::phi_inv)
      .def("log_phi", &Generator::log_phi)
      .def("log_phi_inv", &Generator::log_phi_inv)
      .def("__repr__", [](const Generator& g) { return "Generator(" + to_json(g).dump() + ")"; });

  m.def("generator_names", &generator_names);
  m.def("theorem_ids", &theorem_ids);
  m.def("figure_ids", &figure_ids);

  m.def("po_survival", [](const py::object& baseline, double alpha, double t) {
    return po_survival({parse_baseline(from_py(baseline), "baseline"), alpha}, t);
  });
  m.def("po_hazard", [](const py::object& baseline, double alpha, double t) {
    return po_hazard({parse_baseline(from_py(baseline), "baseline"), alpha}, t);
  });

  // System laws take a model dict as in the scenario schema and a list of t.
  auto curve = [&m](const char* name, double (*f)(const SystemModel&, double)) {
    m.def(name, [f](const py::object& model, const std::vector<double>& ts) {
      const ShockedSystem s = model_from(model);
      std::vector<double> out;
      out.reserve(ts.size());
      for (double t : ts) out.push_back(f(s.system, t));
      return out;
    }, py::arg("model"), py::arg("t"));
  };
  curve("series_survival", &series_survival);
  curve("series_hazard", &series_hazard);
  curve("parallel_cdf", &parallel_cdf);
  curve("parallel_reversed_hazard", &parallel_reversed_hazard);
  m.def("shocked_series_survival", [](const py::object& model, const std::vector<double>& ts) {
    const ShockedSystem s = model_from(model);
    std::vector<double> out;
    for (double t : ts) out.push_back(shocked_series_survival(s, t));
    return out;
  });

  m.def("majorizes", [](const std::vector<double>& x, const std::vector<double>& y,
                        const std::string& mode) {
    return majorizes(x, y, majorization_mode_from_string(mode));
  }, py::arg("x"), py::arg("y"), py::arg("mode"));

  m.def("check_log_convexity", [](const Generator& g, const std::string& sense) {
    return to_py(to_json(check_log_convexity(
        g, sense == "CONCAVE" ? Curvature::CONCAVE : Curvature::CONVEX)));
  }, py::arg("generator"), py::arg("sense") = "CONVEX");
  m.def("check_ratio_shape", [](const Generator& g, const std::string& prop) {
    RatioShape r = RatioShape::DECREASING;
    if (prop == "CONVEX") r = RatioShape::CONVEX;
    else if (prop == "CONCAVE") r = RatioShape::CONCAVE;
    else if (prop != "DECREASING") throw std::invalid_argument("unknown ratio property " + prop);
    return to_py(to_json(check_ratio_shape(g, r)));
  }, py::arg("generator"), py::arg("property") = "DECREASING");
  m.def("check_superadditive_composition", [](const Generator& g1, const Generator& g2) {
    return to_py(to_json(check_superadditive_composition(g1, g2)));
  });

  m.def("check_order", [](const py::object& a, const py::object& b, const std::string& order,
                          const std::string& which, const py::object& grid) {
    const ShockedSystem x = model_from(a), y = model_from(b);
    const Order o = order_from_string(order);
    const Extreme e = extreme_from_string(which);
    const auto g = grid_from(grid);
    return to_py(to_json(g ? check_order(x, y, o, e, *g) : check_order(x, y, o, e)));
  }, py::arg("a"), py::arg("b"), py::arg("order") = "ST", py::arg("which") = "SERIES",
     py::arg("grid") = py::none());

  m.def("run_theorem", [](const std::string& id, const py::object& x, const py::object& y) {
    return to_py(to_json(run_theorem(id, model_from(x), model_from(y))));
  });

  m.def("sample", [](const py::object& model, std::size_t size, std::uint64_t seed,
                     const std::string& coupling) {
    const Json j = from_py(model);
    bool shocked = false;
    const ShockedSystem s = parse_model(j, "model", &shocked);
    SampleOptions opt;
    opt.coupling = coupling == "DISTRIBUTION" ? Coupling::DISTRIBUTION : Coupling::SURVIVAL;
    SampleBatch b;
    {
      py::gil_scoped_release release;
      b = shocked ? sample_shocked(s, size, seed, opt) : sample(s.system, size, seed, opt);
    }
    py::array_t<double> out({b.rows, b.cols});
    std::copy(b.draws.begin(), b.draws.end(), out.mutable_data());
    return out;
  }, py::arg("model"), py::arg("size"), py::arg("seed") = 1, py::arg("coupling") = "SURVIVAL");

  m.def("kendall_tau", &kendall_tau);

  m.def("repro_figure", [](const std::string& id) {
    const FigureData f = repro_figure(id);
    py::list crossings;
    for (const auto& c : f.crossings) crossings.append(c.t);
    py::dict d;
    d["id"] = id;
    d["t"] = f.t;
    d["curve_X"] = f.curve_x;
    d["curve_Y"] = f.curve_y;
    d["crossings"] = crossings;
    d["dropped"] = f.dropped;
    return d;
  });

  m.def("run_scenario", [](const py::object& scenario, const std::optional<std::string>& out) {
    RunOptions o;
    o.out_dir = out;
    int code = 0;
    const Json r = run_scenario_json(parse_scenario(from_py(scenario)), o, &code);
    return py::make_tuple(code, to_py(r));
  }, py::arg("scenario"), py::arg("out_dir") = py::none());
}
