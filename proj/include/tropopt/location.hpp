#pragma once

/// \file
/// Constrained minimax single-facility location with Chebyshev distance:
///
///   minimize    max_j ( w_j + max_i |r_ij - x_i| )
///   subject to  x_j + b_ij <= x_i,  g_i <= x_i <= h_i
///
/// in ordinary arithmetic. The problem is an instance of the max-plus solver
/// in optimization.hpp; `solve_location` evaluates the same closed form
/// directly with max/min/+ on doubles.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "tropopt/optimization.hpp"

namespace tropopt {

using RealMatrix = std::vector<std::vector<double>>;

struct LocationInstance {
  RealMatrix points;              ///< m demand points r_j, each of length n
  std::vector<double> weights;    ///< w_j, any real
  RealMatrix constraints;         ///< b_ij, n x n, -inf = no constraint; empty = none
  std::vector<double> lower;      ///< g, -inf entries allowed; empty = none
  std::vector<double> upper;      ///< h, finite; empty = none

  std::size_t dimension() const { return points.empty() ? 0 : points.front().size(); }

  /// Throws DimensionError / DomainError on inconsistent or non-finite data.
  void validate() const;
};

struct LocationSolution {
  double theta;
  RealMatrix b_star;
  std::vector<double> u_lower;
  std::vector<double> u_upper;
  std::vector<double> x_lower;
  std::vector<double> x_upper;
  std::vector<double> p;
  std::vector<double> q;

  friend bool operator==(const LocationSolution&, const LocationSolution&) = default;
};

using LocationResult = std::variant<LocationSolution, InfeasibilityReport>;

double chebyshev_distance(std::span<const double> r, std::span<const double> s);

struct EnclosingCorners {
  std::vector<double> p;  ///< p_i = max_j (r_ij + w_j)
  std::vector<double> q;  ///< q_i = min_j (r_ij - w_j)
};

EnclosingCorners build_pq(const RealMatrix& points, std::span<const double> weights);

/// max_j (w_j + chebyshev_distance(r_j, x)).
double location_objective(const LocationInstance& inst, std::span<const double> x);

/// The equivalent max-plus problem (p, q from build_pq; B, g, h as given).
ProblemInstance reduce(const LocationInstance& inst);

/// b*_ij: the heaviest path weight from i to j using 1..n-1 arcs, raised to
/// at least 0 on the diagonal.
RealMatrix closure_entries(const RealMatrix& b);

LocationResult solve_location(const LocationInstance& inst);

/// Conventional rendering of a max-plus solution of `reduce(inst)`.
LocationSolution to_location_solution(const SolutionSet& sol, const ProblemInstance& reduced);

}  // namespace tropopt
