#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symref/report.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace symref;

namespace {

const PaperModel& model() {
  static const PaperModel m = PaperModel::build();
  return m;
}

py::object to_python(const Json& body) { return py::module_::import("json").attr("loads")(body.dump()); }

py::object report(Report (*fn)(const PaperModel&)) {
  Report r;
  {
    py::gil_scoped_release release;
    r = fn(model());
  }
  return to_python(r.body);
}

ReflectionParameter to_parameter(const std::map<std::string, std::string>& c) {
  Json doc = Json::object();
  for (const auto& [k, v] : c) doc[k] = v;
  return parse_parameter_json(doc.dump());
}

MatrixQ to_matrix(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw ContractViolation("matrix needs at least one row");
  MatrixQ m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw ContractViolation("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_rational(rows[r][c]);
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_symref, m) {
  m.doc() = "Exact computations for the order-32 symplectic reflection group Q8 x_{Z/2} D8";

  py::register_exception<Error>(m, "SymrefError");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.attr("EXIT_OK") = kExitOk;
  m.attr("EXIT_SINGULAR") = kExitSingular;
  m.attr("EXIT_VERIFICATION_FAILURE") = kExitVerificationFailure;

  m.def("facts", [] { return report(facts_report); }, "Group facts report as a dict.");
  m.def("chartable", [] { return report(chartable_report); }, "Character table report as a dict.");

  m.def(
      "classify",
      [](unsigned jobs) {
        Report r;
        {
          py::gil_scoped_release release;
          r = classify_report(model(), jobs);
        }
        return to_python(r.body);
      },
      "Exhaustive subrepresentation check against the 21 hyperplanes.", "jobs"_a = 1);

  m.def(
      "smooth", [](const std::map<std::string, std::string>& c) {
        return to_python(smooth_report(model(), to_parameter(c)).body);
      },
      "Smoothness report for a parameter given as {'R1': '1', ...}.", "c"_a);

  m.def(
      "leaves", [](const std::map<std::string, std::string>& c) {
        return to_python(leaves_report(model(), to_parameter(c)).body);
      },
      "Leaf count report for a parameter given as {'R1': '1', ...}.", "c"_a);

  m.def(
      "hp0",
      [](unsigned max_degree, unsigned jobs) {
        Report r;
        {
          py::gil_scoped_release release;
          r = hp0_report(model(), max_degree, jobs);
        }
        return to_python(r.body);
      },
      "Truncated zeroth Poisson homology report.", "max_degree"_a = kDefaultHp0Cutoff, "jobs"_a = 1);

  m.def(
      "molien_dims", [](unsigned max_degree) { return molien_dims(model().pg.group, max_degree); },
      "Graded dimensions of the invariant ring up to max_degree.", "max_degree"_a);

  m.def(
      "aut",
      [](unsigned jobs) {
        Report r;
        {
          py::gil_scoped_release release;
          r = aut_report(model(), kDefaultAutSearchCap, jobs);
        }
        return to_python(r.body);
      },
      "Automorphism report.", "jobs"_a = 1);

  m.def("subrep_count", [] { return SubrepEnumerator(model().table).count(); },
        "Number of proper nonzero subrepresentation candidates.");

  m.def("invertible_class_count",
        [] { return invertible_class_count(model().pg.group, model().table.class_data.classes); },
        "Conjugacy classes whose elements g have g - Id invertible.");

  m.def("hyperplanes", [] {
    py::list out;
    for (const auto& h : model().hyperplanes)
      out.append(py::make_tuple(h.label(), std::vector<std::int64_t>(h.normal.begin(), h.normal.end())));
    return out;
  }, "The 21 hyperplanes as (label, primitive normal) pairs.");

  m.def(
      "normalize_rational", [](const std::string& s) { return to_string(parse_rational(s)); },
      "Canonical 'p/q' encoding of a rational string.", "text"_a);

  m.def(
      "rank", [](const std::vector<std::vector<std::string>>& rows) { return rank(to_matrix(rows)); },
      "Rank of a rational matrix given as rows of rational strings.", "rows"_a);

  m.def(
      "kernel_basis",
      [](const std::vector<std::vector<std::string>>& rows) {
        std::vector<std::vector<std::string>> out;
        for (const auto& v : kernel_basis(to_matrix(rows))) {
          std::vector<std::string> col;
          for (const auto& x : v) col.push_back(to_string(x));
          out.push_back(std::move(col));
        }
        return out;
      },
      "Canonical kernel basis of a rational matrix, as rational strings.", "rows"_a);
}
