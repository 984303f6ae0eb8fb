#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "p3d/job.hpp"
#include "p3d/report.hpp"

namespace py = pybind11;
using namespace p3d;

namespace {

JobInput load(const std::string& text, int n) {
  JobInput job = parse_job(text, n);
  if (!admissible(job.u, job.w))
    throw NotAdmissible("u=" + job.u.to_string() + " is not below the Demazure product of beta=" + job.w.to_string());
  return job;
}

std::string verify_one(const std::string& text, const std::string& family, int n) {
  JobInput job = load(text, n);
  if (family == "le" && !job.le) throw std::invalid_argument("family le needs an le= field");
  FamilyReport r = family == "le" ? check_le(*job.le) : check_family(family, job.u, job.w);
  Json j = pair_json(job.u, job.w);
  j["schema"] = kSchema;
  j["report"] = family_json(r);
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_p3d, m) {
  m.doc() = "3D plabic graphs of braid varieties; every function returns a JSON string";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotAdmissible>(m, "NotAdmissible", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.attr("SCHEMA") = kSchema;
  m.def("parse", [](const std::string& text, int n) {
    JobInput job = parse_job(text, n);
    Json j = pair_json(job.u, job.w);
    j["schema"] = kSchema;
    j["admissible"] = admissible(job.u, job.w);
    return j.dump();
  }, py::arg("text"), py::arg("n") = 0);
  m.def("seed", [](const std::string& text, int n) {
    JobInput job = load(text, n);
    return seed_json(job.u, job.w).dump();
  }, py::arg("text"), py::arg("n") = 0);
  m.def("moves", [](const std::string& text, int n) {
    JobInput job = load(text, n);
    return moves_json(job.u, job.w).dump();
  }, py::arg("text"), py::arg("n") = 0);
  m.def("count", [](const std::string& text, const std::string& method, long long q, long long budget, int n) {
    JobInput job = load(text, n);
    return count_json(job.u, job.w, method, q, budget).dump();
  }, py::arg("text"), py::arg("method") = "walk", py::arg("q") = 0, py::arg("budget") = 10000000LL, py::arg("n") = 0);
  m.def("homfly", [](const std::string& text, int n) {
    JobInput job = load(text, n);
    return homfly_json(job.u, job.w).dump();
  }, py::arg("text"), py::arg("n") = 0);
  m.def("verify_pc", [](const std::string& text, int n) {
    JobInput job = load(text, n);
    return pc_json(job.u, job.w).dump();
  }, py::arg("text"), py::arg("n") = 0);
  m.def("verify", &verify_one, py::arg("text"), py::arg("family") = "halfarrow", py::arg("n") = 0);
  m.def("families", [] { return family_names(); });
}
