#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ruled/cli.hpp"
#include "ruled/io.hpp"

namespace py = pybind11;
using namespace ruled;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
Json from_py(const py::object& o) { return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

Ring ring_for(const std::string& model, int trunc) {
  RingConfig cfg;
  if (model == "dvr") cfg.model = Model::Dvr;
  else if (model == "bivariate") cfg.model = Model::Bivariate;
  else fail(ErrorKind::InvalidInput, "unknown model " + model);
  cfg.trunc = trunc;
  return Ring(cfg);
}

std::vector<std::string> slopes_out(const std::vector<Slope>& v) {
  std::vector<std::string> out;
  for (const Slope& s : v) out.push_back(s.str());
  return out;
}

NodalSurface surface_in(const std::vector<std::string>& lines) {
  std::vector<Slope> v;
  for (const auto& s : lines) v.push_back(Slope::parse(s));
  return NodalSurface(std::move(v));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  // messages start with the error kind, e.g. "InvalidSlope: ..."
  py::register_exception<Error>(m, "RuledError", PyExc_ValueError);

  m.def("run", [](const std::vector<std::string>& args, const std::string& stdin_text) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");

  m.def("farey_path", [](const std::string& t) { return slopes_out(farey_path(Slope::parse(t))); });

  m.def("blowup", [](const std::vector<std::string>& lines, std::size_t node) {
    return slopes_out(blowup_node(surface_in(lines), node).lines());
  });

  m.def("divisor_support", [](const std::vector<std::string>& lines, const std::string& s, bool zeros) {
    return divisor_support(surface_in(lines), Slope::parse(s), zeros ? DivisorPart::Zeros : DivisorPart::Poles);
  }, py::arg("lines"), py::arg("slope"), py::arg("zeros") = true);

  m.def("decide", [](const std::string& r0, const std::string& s1, const std::string& s2, const py::object& surface,
                     const py::object& tree, const std::string& model, int trunc) {
    Ring R = ring_for(model, trunc);
    GammaData g{R.parse(r0)};
    SectionData a = parse_section(R, s1), b = parse_section(R, s2);
    Verdict v;
    if (!tree.is_none()) v = decide_general(R, tree_from_json(from_py(tree)), g, a, b);
    else if (!surface.is_none()) v = decide_nodal(R, surface_in(surface.cast<std::vector<std::string>>()), g, a, b);
    else v = decide_nodal(R, p1(), g, a, b);
    return to_py(verdict_to_json(R, v));
  }, py::arg("r0"), py::arg("s1"), py::arg("s2"), py::arg("surface") = py::none(), py::arg("tree") = py::none(),
     py::arg("model") = "dvr", py::arg("trunc") = 16);

  m.def("verify", [](const py::object& frame, const py::object& witness, const std::string& model, int trunc) {
    Ring R = ring_for(model, trunc);
    return to_py(report_to_json(verify_frame(R, frame_from_json(R, from_py(frame)), witness_from_json(R, from_py(witness)))));
  }, py::arg("frame"), py::arg("witness"), py::arg("model") = "dvr", py::arg("trunc") = 16);
}
