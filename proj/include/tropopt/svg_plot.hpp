#pragma once

/// \file
/// Static SVG figures of two-dimensional problems.
///
/// All geometry is emitted in problem coordinates inside a group that flips
/// the y axis, so every element's attributes are the data values themselves.
/// Elements carry a class naming their role:
///
///   enclosing         rectangle with corners p and q
///   bounds            rectangle with corners g and h
///   feasible          feasible polygon (only when g and h bound it)
///   constraint        boundary line of one half-plane from B
///   solution          segment from x_lo to x_hi
///   solution-point    the optimizer when it is unique
///   solution-set      image of the u-box when it is two-dimensional
///   demand            demand point r_j (location problems)
///   weighted-corner   r_j shifted by +-w_j on both axes (location problems)

#include <array>
#include <string>
#include <vector>

#include "tropopt/problem_io.hpp"

namespace tropopt {

using Point2 = std::array<double, 2>;

/// Half-plane a . x <= c.
struct HalfPlane {
  Point2 a;
  double c;
};

/// Half-planes equivalent to B x <= x (off-diagonal entries only).
std::vector<HalfPlane> constraint_half_planes(const Matrix& b);

/// Clips the rectangle [lo, hi] by every half-plane. Vertices are
/// counter-clockwise starting at the lexicographically smallest one, without
/// repeated or collinear vertices. Empty when the region is empty.
std::vector<Point2> clip_rectangle(Point2 lo, Point2 hi, const std::vector<HalfPlane>& planes);

/// Image of the box [u_lo, u_hi] boundary under u -> G u, as a closed path.
std::vector<Point2> solution_set_outline(const SolutionSet& sol);

/// Throws DimensionError unless the problem is two-dimensional.
std::string render_svg(const ProblemFile& file, const Tolerance& tol = {});

}  // namespace tropopt
