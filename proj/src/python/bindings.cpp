#include "ahrg/driver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>

namespace py = pybind11;

namespace {

ahrg::Report run_report(const std::string& config, std::optional<std::string> mode, int jobs, std::uint64_t seed) {
  ahrg::RunOptions opts;
  opts.mode = std::move(mode);
  opts.jobs = jobs;
  opts.seed = seed;
  py::gil_scoped_release release;
  return ahrg::run_text(config, opts);
}

}  // namespace

PYBIND11_MODULE(_ahrg, m) {
  m.doc() = "Exact R-group and Arthur-formula computations for affine Hecke algebras";

  py::register_exception<ahrg::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ahrg::UnsupportedRequest>(m, "UnsupportedRequest", PyExc_ValueError);

  m.def(
      "run",
      [](const std::string& config, std::optional<std::string> mode, int jobs, std::uint64_t seed) {
        return run_report(config, std::move(mode), jobs, seed).json_text();
      },
      py::arg("config"), py::arg("mode") = py::none(), py::arg("jobs") = 1, py::arg("seed") = 1,
      "Run a JSON job config and return the canonical JSON report.");

  m.def(
      "run_with_grams",
      [](const std::string& config, std::optional<std::string> mode, int jobs, std::uint64_t seed) {
        ahrg::Report rep = run_report(config, std::move(mode), jobs, seed);
        return std::make_pair(rep.json_text(), rep.csv());
      },
      py::arg("config"), py::arg("mode") = py::none(), py::arg("jobs") = 1, py::arg("seed") = 1,
      "Like run, also returning the Gram matrices as CSV text.");
}
