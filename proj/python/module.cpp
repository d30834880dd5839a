#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "tropopt/error.hpp"
#include "tropopt/location.hpp"
#include "tropopt/optimization.hpp"
#include "tropopt/oracle.hpp"
#include "tropopt/problem_io.hpp"
#include "tropopt/svg_plot.hpp"

namespace py = pybind11;
using namespace tropopt;

namespace {

using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;

py::list to_list(const Matrix& m) {
  py::list out;
  if (m.cols() == 1) {
    for (double v : m.values()) out.append(v);
    return out;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(m.value(i, j));
    out.append(row);
  }
  return out;
}

py::dict infeasible_dict(const InfeasibilityReport& r) {
  py::dict d;
  d["status"] = "infeasible";
  d["reason"] = std::string(to_string(r.reason));
  d["detail"] = r.detail.value();
  return d;
}

py::dict solution_dict(const SolutionSet& s) {
  py::dict d;
  d["status"] = "optimal";
  d["theta"] = s.theta.value();
  d["generator"] = to_list(s.generator);
  d["u_lo"] = to_list(s.u_lo);
  d["u_hi"] = to_list(s.u_hi);
  d["x_lo"] = to_list(s.x_lo);
  d["x_hi"] = to_list(s.x_hi);
  return d;
}

py::dict result_dict(const SolveResult& r) {
  if (auto* s = std::get_if<SolutionSet>(&r)) return solution_dict(*s);
  return infeasible_dict(std::get<InfeasibilityReport>(r));
}

ProblemInstance make_instance(SemifieldKind kind, const Vec& p, const Vec& q,
                              const std::optional<Vec>& g, const std::optional<Vec>& h,
                              const std::optional<Mat>& b) {
  ProblemInstance inst{Matrix::column(kind, p), Matrix::column(kind, q)};
  if (g) inst.g = Matrix::column(kind, *g);
  if (h) inst.h = Matrix::column(kind, *h);
  if (b) inst.b = Matrix::from_rows(kind, *b);
  return inst;
}

Tolerance tol_of(std::optional<double> eps) { return Tolerance{eps}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Closed-form tropical optimization and minimax Chebyshev location";

  py::enum_<SemifieldKind>(m, "Semifield")
      .value("MaxPlus", SemifieldKind::MaxPlus)
      .value("MinPlus", SemifieldKind::MinPlus)
      .value("MaxTimes", SemifieldKind::MaxTimes)
      .value("MinTimes", SemifieldKind::MinTimes);

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<GridGuardError>(m, "GridGuardError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "solve_unconstrained",
      [](const Vec& p, const Vec& q, const std::string& semifield, std::optional<double> eps) {
        const auto kind = parse_semifield(semifield);
        return solution_dict(solve_unconstrained(Matrix::column(kind, p), Matrix::column(kind, q), tol_of(eps)));
      },
      py::arg("p"), py::arg("q"), py::arg("semifield") = "max-plus", py::arg("epsilon") = py::none());

  m.def(
      "solve_linear_constrained",
      [](const Mat& b, const Vec& p, const Vec& q, const std::string& semifield, std::optional<double> eps) {
        const auto kind = parse_semifield(semifield);
        return result_dict(solve_linear_constrained(Matrix::from_rows(kind, b), Matrix::column(kind, p),
                                                    Matrix::column(kind, q), tol_of(eps)));
      },
      py::arg("B"), py::arg("p"), py::arg("q"), py::arg("semifield") = "max-plus",
      py::arg("epsilon") = py::none());

  m.def(
      "solve_box_constrained",
      [](const Vec& p, const Vec& q, const Vec& g, const Vec& h, const std::string& semifield,
         std::optional<double> eps) {
        const auto kind = parse_semifield(semifield);
        return result_dict(solve_box_constrained(Matrix::column(kind, p), Matrix::column(kind, q),
                                                 Matrix::column(kind, g), Matrix::column(kind, h), tol_of(eps)));
      },
      py::arg("p"), py::arg("q"), py::arg("g"), py::arg("h"), py::arg("semifield") = "max-plus",
      py::arg("epsilon") = py::none());

  m.def(
      "solve_general",
      [](const Vec& p, const Vec& q, std::optional<Vec> g, std::optional<Vec> h, std::optional<Mat> b,
         const std::string& semifield, std::optional<double> eps) {
        return result_dict(solve_general(make_instance(parse_semifield(semifield), p, q, g, h, b), tol_of(eps)));
      },
      py::arg("p"), py::arg("q"), py::arg("g") = py::none(), py::arg("h") = py::none(),
      py::arg("B") = py::none(), py::arg("semifield") = "max-plus", py::arg("epsilon") = py::none());

  m.def(
      "objective",
      [](const Vec& p, const Vec& q, const Vec& x, const std::string& semifield) {
        const auto kind = parse_semifield(semifield);
        return objective(Matrix::column(kind, p), Matrix::column(kind, q), Matrix::column(kind, x)).value();
      },
      py::arg("p"), py::arg("q"), py::arg("x"), py::arg("semifield") = "max-plus");

  m.def(
      "brute_force_min",
      [](const Vec& p, const Vec& q, std::optional<Vec> g, std::optional<Vec> h, std::optional<Mat> b,
         const Vec& lower, const Vec& upper, double step, const std::string& semifield) {
        const auto inst = make_instance(parse_semifield(semifield), p, q, g, h, b);
        const auto r = brute_force_min(inst, GridSpec{lower, upper, step});
        py::list argmins;
        for (const auto& x : r.argmins) argmins.append(to_list(x));
        py::object minimum = r.minimum ? py::object(py::float_(r.minimum->value())) : py::none();
        return py::make_tuple(minimum, argmins);
      },
      py::arg("p"), py::arg("q"), py::arg("g") = py::none(), py::arg("h") = py::none(),
      py::arg("B") = py::none(), py::arg("lower"), py::arg("upper"), py::arg("step") = 0.5,
      py::arg("semifield") = "max-plus");

  m.def("chebyshev_distance", [](const Vec& r, const Vec& s) { return chebyshev_distance(r, s); });

  m.def("build_pq", [](const Mat& points, const Vec& weights) {
    auto c = build_pq(points, weights);
    return py::make_tuple(c.p, c.q);
  });

  m.def(
      "solve_location",
      [](const Mat& points, const Vec& weights, std::optional<Mat> b, std::optional<Vec> g,
         std::optional<Vec> h) -> py::dict {
        LocationInstance inst{points, weights, b.value_or(Mat{}), g.value_or(Vec{}), h.value_or(Vec{})};
        auto r = solve_location(inst);
        if (auto* bad = std::get_if<InfeasibilityReport>(&r)) return infeasible_dict(*bad);
        const auto& s = std::get<LocationSolution>(r);
        py::dict d;
        d["status"] = "optimal";
        d["theta"] = s.theta;
        d["b_star"] = s.b_star;
        d["u_lo"] = s.u_lower;
        d["u_hi"] = s.u_upper;
        d["x_lo"] = s.x_lower;
        d["x_hi"] = s.x_upper;
        d["p"] = s.p;
        d["q"] = s.q;
        return d;
      },
      py::arg("points"), py::arg("weights"), py::arg("B") = py::none(), py::arg("g") = py::none(),
      py::arg("h") = py::none());

  m.def(
      "solve_problem_json",
      [](const std::string& text, std::optional<double> eps) {
        const auto file = parse_problem_text(text);
        return make_report(file, solve_problem(file, tol_of(eps))).dump();
      },
      py::arg("text"), py::arg("epsilon") = py::none(),
      "Solve a JSON problem document and return the JSON report.");

  m.def(
      "render_svg",
      [](const std::string& text) { return tropopt::render_svg(parse_problem_text(text)); },
      py::arg("text"), "Render a two-dimensional JSON problem document as SVG.");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
