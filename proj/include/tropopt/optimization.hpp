#pragma once

/// \file
/// Closed-form solvers for
///
///   minimize    x^- p (+) q^- x
///   subject to  B x (+) g <= x,  x <= h
///
/// over regular x, and for its special cases without the matrix constraint,
/// without the bounds, or without either.

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>

#include "tropopt/matrix.hpp"

namespace tropopt {

/// Data of one problem. Absent `b` is the zero matrix, absent `g` the zero
/// vector, absent `h` means no upper bound.
struct ProblemInstance {
  Matrix p;
  Matrix q;
  std::optional<Matrix> g = std::nullopt;
  std::optional<Matrix> h = std::nullopt;
  std::optional<Matrix> b = std::nullopt;

  SemifieldKind kind() const { return p.kind(); }
  std::size_t dimension() const { return p.rows(); }

  /// Checks that every present vector is an n x 1 column and `b` is n x n,
  /// all of one semifield kind. Throws DimensionError / DomainError.
  void validate_shapes() const;
};

/// Optimizers are x = generator * u for every u with u_lo <= u <= u_hi.
/// x_lo and x_hi are the images of the two bounds; when the generator is not
/// the identity the set is the image of a box, not the box [x_lo, x_hi].
struct SolutionSet {
  Scalar theta;
  Matrix generator;
  Matrix u_lo;
  Matrix u_hi;
  Matrix x_lo;
  Matrix x_hi;
};

enum class InfeasibilityReason {
  TrExceedsOne,        ///< Tr(B) > 1: B x <= x has no regular solution.
  BoundsIncompatible,  ///< h^- B* g > 1 (or g not <= h without B).
};

std::string_view to_string(InfeasibilityReason reason);

struct InfeasibilityReport {
  InfeasibilityReason reason;
  Scalar detail;  ///< the offending value, always > 1
};

using SolveResult = std::variant<SolutionSet, InfeasibilityReport>;

/// No constraints. p and q must be regular.
SolutionSet solve_unconstrained(const Matrix& p, const Matrix& q, const Tolerance& tol = {});

/// Constraint B x <= x only. p non-zero, q regular.
SolveResult solve_linear_constrained(const Matrix& b, const Matrix& p, const Matrix& q,
                                     const Tolerance& tol = {});

/// Constraint g <= x <= h only. All four vectors regular.
SolveResult solve_box_constrained(const Matrix& p, const Matrix& q, const Matrix& g,
                                  const Matrix& h, const Tolerance& tol = {});

/// Both constraints, any of B, g, h may be absent. p non-zero, q and h regular.
SolveResult solve_general(const ProblemInstance& inst, const Tolerance& tol = {});

/// x^- p (+) q^- x. x must be regular (PreconditionError).
Scalar objective(const Matrix& p, const Matrix& q, const Matrix& x);

/// x satisfies B x <= x, g <= x <= h (where present).
bool is_feasible(const ProblemInstance& inst, const Matrix& x, const Tolerance& tol = {});

/// Direct test: x is regular, feasible and attains sol.theta.
bool contains(const SolutionSet& sol, const ProblemInstance& inst, const Matrix& x,
              const Tolerance& tol = {});

/// Generator test: x = generator * u for some u in [u_lo, u_hi]. Uses the
/// greatest candidate u = (x^- G)^- meet u_hi, so no search is needed.
bool in_solution_image(const SolutionSet& sol, const Matrix& x, const Tolerance& tol = {});

/// The longer minimum formula ((B* (q^- B*)^-)^- p)^(1/2) for the problem
/// with only B x <= x. Requires Tr(B) <= 1.
Scalar theta_original_form(const Matrix& b, const Matrix& p, const Matrix& q,
                           const Tolerance& tol = {});

/// Whether theta_original_form matches the compact (q^- B* p)^(1/2).
bool theta_forms_agree(const Matrix& b, const Matrix& p, const Matrix& q,
                       const Tolerance& tol = {});

}  // namespace tropopt
