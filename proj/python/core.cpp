#include <string>
#include <utility>

#include <pybind11/pybind11.h>

#include "holo/commands.hpp"
#include "holo/minkowski.hpp"

namespace py = pybind11;
using namespace holo;

namespace {

using Reply = std::pair<std::string, int>;

Reply reply(const CommandResult& r) { return {r.report.dump(), r.status}; }

CommandOptions options(std::uint64_t seed, std::size_t budget, double tol) { return {seed, budget, tol}; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string bracket_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("u") || !j.contains("v"))
    throw InputError("bracket input needs n, u and v");
  const std::size_t n = j["n"].get<std::size_t>();
  return triple_to_json(bracket(triple_from_json(j["u"], n), triple_from_json(j["v"], n))).dump();
}

std::string chart_of_line_json(std::size_t n, const std::string& v) {
  return vector_to_json(MinkowskiSpace(n).chart_of_line(vector_from_json(parse(v), n + 2, true))).dump();
}

std::string line_of_chart_json(std::size_t n, const std::string& y) {
  return vector_to_json(MinkowskiSpace(n).line_of_chart(vector_from_json(parse(y), n))).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "JSON-level bindings of the holo library";
  m.attr("version") = kVersion;

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  const auto seed = py::arg("seed") = 0;
  const auto budget = py::arg("budget") = 64;
  const auto tol = py::arg("tol") = 1e-9;

  m.def("closure", [](const std::string& in, std::uint64_t s, std::size_t b) {
    return reply(run_closure(parse(in), options(s, b, 1e-9)));
  }, py::arg("input"), seed, budget);
  m.def("check_wi", [](const std::string& in, std::uint64_t s, std::size_t b) {
    return reply(run_check_wi(parse(in), options(s, b, 1e-9)));
  }, py::arg("input"), seed, budget);
  m.def("classify", [](const std::string& in, std::uint64_t s, std::size_t b) {
    return reply(run_classify(parse(in), options(s, b, 1e-9)));
  }, py::arg("input"), seed, budget);
  m.def("boundary_act", [](const std::string& in, double t) {
    return reply(run_boundary_act(parse(in), options(0, 64, t)));
  }, py::arg("input"), tol);
  m.def("transport", [](const std::string& in, double t) {
    return reply(run_transport(parse(in), options(0, 64, t)));
  }, py::arg("input"), tol);
  m.def("make", [](int type, const std::string& B, std::size_t n, bool surjective, std::uint64_t s) {
    return reply(run_make({type, B, n, surjective, s}));
  }, py::arg("type"), py::arg("B") = "0", py::arg("n") = 2, py::arg("surjective") = true, seed);
  m.def("selftest", [](std::uint64_t s, std::size_t b, double scale) {
    std::string log;
    CommandResult r;
    {
      py::gil_scoped_release release;
      r = run_selftest(options(s, b, 1e-9), scale, &log);
    }
    return std::make_tuple(r.report.dump(), r.status, log);
  }, seed, budget, py::arg("scale") = 0.2);
  m.def("bracket", &bracket_json, py::arg("input"));
  m.def("chart_of_line", &chart_of_line_json, py::arg("n"), py::arg("v"));
  m.def("line_of_chart", &line_of_chart_json, py::arg("n"), py::arg("Y"));
}
