#include "tropopt/linear_systems.hpp"

#include "tropopt/error.hpp"

namespace tropopt {

UpperSolution solve_ax_leq_d(const Matrix& a, const Matrix& d, const Tolerance&) {
  if (d.cols() != 1) throw DimensionError("solve_ax_leq_d: d must be a column vector");
  if (a.rows() != d.rows()) throw DimensionError("solve_ax_leq_d: A.rows != d.size");
  if (a.kind() != d.kind()) throw DomainError("solve_ax_leq_d: semifield kind mismatch");
  if (!is_column_regular(a)) throw PreconditionError("solve_ax_leq_d: A is not column-regular");
  if (!is_regular(d)) throw PreconditionError("solve_ax_leq_d: d is not regular");
  return {conjugate(multiply(conjugate(d), a))};
}

std::variant<ConeSolution, Infeasible> solve_ax_plus_b_leq_x(const Matrix& a, const Matrix& b,
                                                            const Tolerance& tol) {
  if (!a.is_square()) throw DimensionError("solve_ax_plus_b_leq_x: A is not square");
  if (b.cols() != 1 || b.rows() != a.rows())
    throw DimensionError("solve_ax_plus_b_leq_x: b must be a column of length A.rows");
  if (a.kind() != b.kind()) throw DomainError("solve_ax_plus_b_leq_x: semifield kind mismatch");
  const Scalar tr = trace_of_powers(a);
  if (!leq(tr, Scalar::one(a.kind()), tol)) return Infeasible{tr};
  return ConeSolution{asterate(a), b};
}

}  // namespace tropopt
