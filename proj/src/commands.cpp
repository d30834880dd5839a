#include "tropopt/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>

#include "tropopt/error.hpp"
#include "tropopt/format.hpp"
#include "tropopt/oracle.hpp"
#include "tropopt/problem_io.hpp"
#include "tropopt/svg_plot.hpp"

namespace tropopt {

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const GridGuardError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::logic_error& e) {
    // DomainError, DimensionError, PreconditionError and friends.
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

std::string suggested_step(const GridSpec& grid) {
  double points = 1.0;
  for (std::size_t i = 0; i < grid.lower.size(); ++i)
    points *= std::floor((grid.upper[i] - grid.lower[i]) / grid.step) + 1.0;
  const double factor =
      std::ceil(std::pow(points / static_cast<double>(kMaxGridPoints), 1.0 / grid.lower.size()) * 2.0) / 2.0;
  return format_number(grid.step * std::max(factor, 1.5));
}

std::optional<SolutionSet> as_solution_set(const ProblemFile& file, const Tolerance& tol,
                                           std::optional<InfeasibilityReport>& infeasible) {
  // Location problems are verified through their max-plus reduction.
  SolveResult r = file.type == ProblemType::Location
                      ? solve_general(file.as_instance(), tol)
                      : [&]() -> SolveResult {
                          auto o = solve_problem(file, tol);
                          if (auto* s = std::get_if<SolutionSet>(&o)) return *s;
                          return std::get<InfeasibilityReport>(o);
                        }();
  if (auto* s = std::get_if<SolutionSet>(&r)) return *s;
  infeasible = std::get<InfeasibilityReport>(r);
  return std::nullopt;
}

}  // namespace

Tolerance resolve_tolerance(const CommandOptions& opts) {
  if (opts.epsilon) return {opts.epsilon};
  if (const char* env = std::getenv(kEpsilonEnv); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0.0))
      throw ParseError(std::string(kEpsilonEnv) + ": not a non-negative number");
    return {v};
  }
  return {};
}

int run_solve(const std::string& path, const CommandOptions& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const Tolerance tol = resolve_tolerance(opts);
    const ProblemFile file = load_problem(path, opts.semifield);
    const ProblemOutcome outcome = solve_problem(file, tol);
    out << make_report(file, outcome).dump(2) << '\n';
    return std::holds_alternative<InfeasibilityReport>(outcome) ? kExitInfeasible : kExitOk;
  });
}

int run_verify(const std::string& path, const CommandOptions& opts, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&]() -> int {
    const Tolerance tol = resolve_tolerance(opts);
    const ProblemFile file = load_problem(path, opts.semifield);
    const ProblemInstance inst = file.as_instance();
    if (inst.dimension() > kMaxOracleDimension) {
      throw GridGuardError("verify supports dimension <= " + std::to_string(kMaxOracleDimension) +
                           ", got " + std::to_string(inst.dimension()));
    }

    GridSpec grid = default_grid(inst, opts.grid_step);
    if (!opts.grid_lo.empty()) grid.lower = opts.grid_lo;
    if (!opts.grid_hi.empty()) grid.upper = opts.grid_hi;
    if (grid.lower.size() != inst.dimension() || grid.upper.size() != inst.dimension())
      throw GridGuardError("grid bounds must have one entry per coordinate");
    try {
      grid_point_count(grid);
    } catch (const GridGuardError& e) {
      throw GridGuardError(std::string(e.what()) + " (suggested --grid-step " + suggested_step(grid) + ")");
    }

    std::optional<InfeasibilityReport> infeasible;
    const auto sol = as_solution_set(file, tol, infeasible);
    const OracleResult oracle = brute_force_min(inst, grid, tol);

    out << "grid: " << oracle.evaluated << " points, step " << format_number(grid.step) << ", "
        << oracle.feasible << " feasible\n";
    if (!sol) {
      out << "solver: infeasible (" << to_string(infeasible->reason) << ", detail "
          << to_string(infeasible->detail) << ")\n";
      if (!oracle.minimum) {
        out << "agree: infeasible\n";
        return kExitOk;
      }
      out << "disagree: oracle found feasible minimum " << to_string(*oracle.minimum) << '\n';
      return kExitInfeasible;
    }

    out << "solver: theta = " << to_string(sol->theta) << '\n';
    if (!oracle.minimum) {
      out << "disagree: oracle found no feasible grid point\n";
      return kExitInfeasible;
    }
    out << "oracle: min = " << to_string(*oracle.minimum) << ", " << oracle.argmins.size()
        << " argmins\n";

    bool ok = approx_equal(*oracle.minimum, sol->theta, tol);
    out << (ok ? "agree: θ = " + to_string(sol->theta)
               : "disagree: solver θ = " + to_string(sol->theta) + ", oracle min = " +
                     to_string(*oracle.minimum))
        << '\n';

    std::size_t members = 0;
    for (const auto& x : oracle.argmins)
      if (contains(*sol, inst, x, tol) && in_solution_image(*sol, x, tol)) ++members;
    out << "membership: " << members << "/" << oracle.argmins.size()
        << " oracle argmins in the solution set\n";
    ok = ok && members == oracle.argmins.size();

    std::vector<std::pair<const char*, Matrix>> samples{{"x_lo", sol->x_lo}, {"x_hi", sol->x_hi}};
    if (is_regular(sol->u_lo) && is_regular(sol->u_hi)) {
      Matrix u_mid = sol->u_lo;
      for (std::size_t i = 0; i < inst.dimension(); ++i)
        u_mid.set(i, 0, pow(sol->u_lo[i] * sol->u_hi[i], 0.5));
      samples.emplace_back("x_mid", sol->generator * u_mid);
    }
    for (const auto& [name, x] : samples) {
      const bool in = contains(*sol, inst, x, tol);
      out << "sample " << name << " = " << to_string(x) << (in ? ": feasible, attains θ" : ": FAILS")
          << '\n';
      ok = ok && in;
    }
    return ok ? kExitOk : kExitInfeasible;
  });
}

int run_plot(const std::string& path, const CommandOptions& opts, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const Tolerance tol = resolve_tolerance(opts);
    const ProblemFile file = load_problem(path, opts.semifield);
    out << render_svg(file, tol);
    return kExitOk;
  });
}

}  // namespace tropopt
