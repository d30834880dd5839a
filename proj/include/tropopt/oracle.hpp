#pragma once

/// \file
/// Exhaustive grid search over the feasible region of small instances. Used
/// to certify solver minima independently of any closed-form reasoning.

#include <cstddef>
#include <optional>
#include <vector>

#include "tropopt/optimization.hpp"

namespace tropopt {

inline constexpr std::size_t kMaxOracleDimension = 3;
inline constexpr std::size_t kMaxGridPoints = 1'000'000;

/// Axis-aligned lattice lower + k * step (encoded values), k = 0, 1, ...
/// while the point stays <= upper.
struct GridSpec {
  std::vector<double> lower;
  std::vector<double> upper;
  double step = 0.5;
};

/// Number of lattice points; throws GridGuardError on malformed specs.
std::size_t grid_point_count(const GridSpec& grid);

/// Box guaranteed to contain an optimizer of a feasible instance over an
/// additive semifield: [g, h] where present, padded elsewhere by a bound on
/// the optimum derived from the magnitudes of p, q, g, h and B. The padding
/// depends only on the data, never on a solver result.
GridSpec default_grid(const ProblemInstance& inst, double step = 0.5);

struct OracleResult {
  std::optional<Scalar> minimum;  ///< empty when no grid point is feasible
  std::vector<Matrix> argmins;    ///< lexicographic in grid order
  std::size_t evaluated = 0;
  std::size_t feasible = 0;
};

/// Evaluates the objective at every feasible grid point. Requires dimension
/// <= kMaxOracleDimension and at most kMaxGridPoints points (GridGuardError).
OracleResult brute_force_min(const ProblemInstance& inst, const GridSpec& grid,
                             const Tolerance& tol = {});

}  // namespace tropopt
