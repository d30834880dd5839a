#include "tropopt/optimization.hpp"

#include <stdexcept>
#include <string>

#include "tropopt/error.hpp"
#include "tropopt/linear_systems.hpp"

namespace tropopt {

namespace {

void require_column(const Matrix& v, std::size_t n, SemifieldKind kind, const char* name) {
  if (v.kind() != kind) throw DomainError(std::string(name) + ": semifield kind mismatch");
  if (v.cols() != 1 || v.rows() != n)
    throw DimensionError(std::string(name) + ": expected a column of length " + std::to_string(n));
}

void require_regular(const Matrix& v, const char* name) {
  if (!is_regular(v)) throw PreconditionError(std::string(name) + " must be regular");
}

void require_nonzero(const Matrix& v, const char* name) {
  if (is_zero(v)) throw PreconditionError(std::string(name) + " must be non-zero");
}

Scalar half_power(const Matrix& one_by_one) { return pow(one_by_one.scalar(), 0.5); }

// The feasibility certificate failed after construction; only float
// drift can get here.
void check_bounds_ordered(const Matrix& lo, const Matrix& hi, const Tolerance& tol) {
  if (!leq(lo, hi, tol)) {
    throw std::logic_error("solver produced u_lo > u_hi: " + to_string(lo) + " vs " +
                           to_string(hi));
  }
}

std::optional<InfeasibilityReport> check_trace(const Matrix& b, const Tolerance& tol) {
  auto cone = solve_ax_plus_b_leq_x(b, Matrix::zero(b.kind(), b.rows(), 1), tol);
  if (auto* bad = std::get_if<Infeasible>(&cone))
    return InfeasibilityReport{InfeasibilityReason::TrExceedsOne, bad->trace_of_powers};
  return std::nullopt;
}

}  // namespace

std::string_view to_string(InfeasibilityReason reason) {
  switch (reason) {
    case InfeasibilityReason::TrExceedsOne: return "TrExceedsOne";
    case InfeasibilityReason::BoundsIncompatible: return "BoundsIncompatible";
  }
  return "?";
}

void ProblemInstance::validate_shapes() const {
  const std::size_t n = p.rows();
  require_column(p, n, kind(), "p");
  require_column(q, n, kind(), "q");
  if (g) require_column(*g, n, kind(), "g");
  if (h) require_column(*h, n, kind(), "h");
  if (b) {
    if (b->kind() != kind()) throw DomainError("B: semifield kind mismatch");
    if (b->rows() != n || b->cols() != n)
      throw DimensionError("B: expected " + std::to_string(n) + "x" + std::to_string(n));
  }
}

SolutionSet solve_unconstrained(const Matrix& p, const Matrix& q, const Tolerance& tol) {
  ProblemInstance{p, q}.validate_shapes();
  require_regular(p, "p");
  require_regular(q, "q");
  const SemifieldKind kind = p.kind();
  const Scalar theta = half_power(conjugate(q) * p);
  Matrix lo = inv(theta) * p;
  Matrix hi = theta * q;
  check_bounds_ordered(lo, hi, tol);
  return {theta, Matrix::identity(kind, p.rows()), lo, hi, lo, hi};
}

SolveResult solve_linear_constrained(const Matrix& b, const Matrix& p, const Matrix& q,
                                     const Tolerance& tol) {
  ProblemInstance{p, q, std::nullopt, std::nullopt, b}.validate_shapes();
  require_nonzero(p, "p");
  require_regular(q, "q");
  if (auto bad = check_trace(b, tol)) return *bad;

  const Matrix star = asterate(b);
  const Matrix q_star = conjugate(q) * star;
  const Scalar theta = half_power(q_star * p);
  Matrix u_lo = inv(theta) * p;
  Matrix u_hi = theta * conjugate(q_star);
  check_bounds_ordered(u_lo, u_hi, tol);
  Matrix x_lo = star * u_lo;
  Matrix x_hi = star * u_hi;
  return SolutionSet{theta, star, std::move(u_lo), std::move(u_hi), std::move(x_lo),
                     std::move(x_hi)};
}

SolveResult solve_box_constrained(const Matrix& p, const Matrix& q, const Matrix& g,
                                  const Matrix& h, const Tolerance& tol) {
  ProblemInstance{p, q, g, h}.validate_shapes();
  require_regular(p, "p");
  require_regular(q, "q");
  require_regular(g, "g");
  require_regular(h, "h");
  const Scalar gap = (conjugate(h) * g).scalar();
  if (!leq(gap, Scalar::one(p.kind()), tol))
    return InfeasibilityReport{InfeasibilityReason::BoundsIncompatible, gap};

  const Matrix h_conj = conjugate(h);
  const Matrix q_conj = conjugate(q);
  const Scalar theta = half_power(q_conj * p) + (h_conj * p).scalar() + (q_conj * g).scalar();
  Matrix lo = g + inv(theta) * p;
  Matrix hi = conjugate(h_conj + inv(theta) * q_conj);
  check_bounds_ordered(lo, hi, tol);
  return SolutionSet{theta, Matrix::identity(p.kind(), p.rows()), lo, hi, lo, hi};
}

SolveResult solve_general(const ProblemInstance& inst, const Tolerance& tol) {
  inst.validate_shapes();
  const SemifieldKind kind = inst.kind();
  const std::size_t n = inst.dimension();
  const Matrix& p = inst.p;
  const Matrix& q = inst.q;
  require_nonzero(p, "p");
  require_regular(q, "q");
  if (inst.h) require_regular(*inst.h, "h");

  Matrix star = Matrix::identity(kind, n);
  if (inst.b) {
    if (auto bad = check_trace(*inst.b, tol)) return *bad;
    star = asterate(*inst.b);
  }
  const Matrix g = inst.g.value_or(Matrix::zero(kind, n, 1));

  std::optional<Matrix> h_star;
  if (inst.h) {
    h_star = conjugate(*inst.h) * star;
    const Scalar gap = (*h_star * g).scalar();
    if (!leq(gap, Scalar::one(kind), tol))
      return InfeasibilityReport{InfeasibilityReason::BoundsIncompatible, gap};
  }

  const Matrix q_star = conjugate(q) * star;
  Scalar theta = half_power(q_star * p) + (q_star * g).scalar();
  if (h_star) theta = theta + (*h_star * p).scalar();

  Matrix u_lo = g + inv(theta) * p;
  Matrix row = inv(theta) * conjugate(q);
  if (inst.h) row = conjugate(*inst.h) + row;
  Matrix u_hi = conjugate(row * star);
  check_bounds_ordered(u_lo, u_hi, tol);
  Matrix x_lo = star * u_lo;
  Matrix x_hi = star * u_hi;
  return SolutionSet{theta, std::move(star), std::move(u_lo), std::move(u_hi), std::move(x_lo),
                     std::move(x_hi)};
}

Scalar objective(const Matrix& p, const Matrix& q, const Matrix& x) {
  if (!is_regular(x)) throw PreconditionError("objective: x must be regular");
  return (conjugate(x) * p).scalar() + (conjugate(q) * x).scalar();
}

bool is_feasible(const ProblemInstance& inst, const Matrix& x, const Tolerance& tol) {
  if (inst.b && !leq(*inst.b * x, x, tol)) return false;
  if (inst.g && !leq(*inst.g, x, tol)) return false;
  if (inst.h && !leq(x, *inst.h, tol)) return false;
  return true;
}

bool contains(const SolutionSet& sol, const ProblemInstance& inst, const Matrix& x,
              const Tolerance& tol) {
  if (x.kind() != inst.kind() || x.cols() != 1 || x.rows() != inst.dimension()) return false;
  if (!is_regular(x) || !is_feasible(inst, x, tol)) return false;
  return approx_equal(objective(inst.p, inst.q, x), sol.theta, tol);
}

bool in_solution_image(const SolutionSet& sol, const Matrix& x, const Tolerance& tol) {
  if (x.kind() != sol.generator.kind() || x.cols() != 1 || x.rows() != sol.generator.rows())
    return false;
  if (!is_regular(x)) return false;
  const Matrix candidate = meet(conjugate(conjugate(x) * sol.generator), sol.u_hi);
  return leq(sol.u_lo, candidate, tol) && approx_equal(sol.generator * candidate, x, tol);
}

Scalar theta_original_form(const Matrix& b, const Matrix& p, const Matrix& q,
                           const Tolerance& tol) {
  ProblemInstance{p, q, std::nullopt, std::nullopt, b}.validate_shapes();
  require_nonzero(p, "p");
  require_regular(q, "q");
  if (check_trace(b, tol)) throw PreconditionError("theta_original_form: Tr(B) > 1");
  const Matrix star = asterate(b);
  const Matrix particular = star * conjugate(conjugate(q) * star);
  return half_power(conjugate(particular) * p);
}

bool theta_forms_agree(const Matrix& b, const Matrix& p, const Matrix& q, const Tolerance& tol) {
  const Scalar original = theta_original_form(b, p, q, tol);
  const Scalar compact = half_power(conjugate(q) * asterate(b) * p);
  return approx_equal(original, compact, tol);
}

}  // namespace tropopt
