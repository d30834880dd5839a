#pragma once

/// \file
/// Closed-form regular solutions of the two linear inequalities every solver
/// in this library reduces to:
///
///   A x <= d          (all regular solutions: x <= (d^- A)^-)
///   A x (+) b <= x    (all regular solutions: x = A* u, u >= b, when Tr(A) <= 1)

#include <variant>

#include "tropopt/matrix.hpp"

namespace tropopt {

/// Regular solutions of A x <= d are exactly the regular x <= bound.
struct UpperSolution {
  Matrix bound;
};

/// Regular solutions of A x (+) b <= x are exactly x = generator * u for
/// regular u >= lower.
struct ConeSolution {
  Matrix generator;
  Matrix lower;
};

/// Tr(A) > 1: no regular solution exists.
struct Infeasible {
  Scalar trace_of_powers;
};

/// Requires A column-regular, d regular and A.rows() == d.size();
/// PreconditionError / DimensionError otherwise.
UpperSolution solve_ax_leq_d(const Matrix& a, const Matrix& d, const Tolerance& tol = {});

std::variant<ConeSolution, Infeasible> solve_ax_plus_b_leq_x(const Matrix& a, const Matrix& b,
                                                            const Tolerance& tol = {});

}  // namespace tropopt
