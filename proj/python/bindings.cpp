// JSON documents cross the boundary as strings; the Python package decodes
// them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dvrinv/errors.hpp"
#include "dvrinv/job.hpp"

namespace py = pybind11;

namespace {

dvrinv::Json parse_json(const std::string& text, const char* what) {
  try {
    return dvrinv::Json::parse(text);
  } catch (const dvrinv::Json::parse_error& e) {
    throw dvrinv::InputError(std::string("malformed JSON in ") + what + ": " + e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariant-theory checks for finite matrix groups over a DVR";
  m.attr("__version__") = dvrinv::kToolVersion;

  auto base = py::register_exception<dvrinv::Error>(m, "DvrinvError", PyExc_RuntimeError);
  py::register_exception<dvrinv::InputError>(m, "InputError", base.ptr());
  py::register_exception<dvrinv::HypothesisViolation>(m, "HypothesisViolation", base.ptr());

  m.def("known_checks", &dvrinv::known_checks, "Names accepted in a job's \"checks\" list.");
  m.def("example_names", &dvrinv::example_names, "Names of the bundled job documents.");
  m.def(
      "example", [](const std::string& name) { return dvrinv::serialize(dvrinv::example(name)).dump(); },
      py::arg("name"), "The bundled job document `name` as JSON text.");
  m.def(
      "normalize_job", [](const std::string& text) { return dvrinv::serialize(dvrinv::parse_jobspec_text(text)).dump(); },
      py::arg("job"), "Validates a job document and returns it with defaults filled in and entries canonicalized.");
  m.def(
      "analyze",
      [](const std::string& text) {
        const auto spec = dvrinv::parse_jobspec_text(text);
        dvrinv::RunResult res;
        {
          py::gil_scoped_release release;
          res = dvrinv::run(spec);
        }
        return py::make_tuple(res.report.dump(), res.exit_code);
      },
      py::arg("job"), "Runs a job document; returns (report JSON text, exit code).");
  m.def(
      "render_text", [](const std::string& report) { return dvrinv::render_text(parse_json(report, "report")); },
      py::arg("report"), "Human-readable rendering of a report.");
  m.def(
      "verify_report",
      [](const std::string& report) {
        const auto r = dvrinv::verify_report(parse_json(report, "report"));
        return py::make_tuple(r.consistent, r.checked, r.failures);
      },
      py::arg("report"), "Rechecks a report; returns (consistent, checked, failures).");
}
