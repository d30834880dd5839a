#include "tropopt/location.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tropopt/error.hpp"

namespace tropopt {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_finite(double v, const std::string& what) {
  if (!std::isfinite(v)) throw DomainError(what + " must be finite");
}

// Max-plus product in plain doubles; -inf absorbs.
RealMatrix maxplus_product(const RealMatrix& a, const RealMatrix& b) {
  const std::size_t n = a.size();
  RealMatrix c(n, std::vector<double>(n, kNegInf));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == kNegInf) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b[k][j] != kNegInf) c[i][j] = std::max(c[i][j], a[i][k] + b[k][j]);
    }
  return c;
}

// Heaviest cycle weight over cycles of 1..n arcs.
double max_cycle_weight(const RealMatrix& b) {
  const std::size_t n = b.size();
  double worst = kNegInf;
  RealMatrix walk = b;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) walk = maxplus_product(walk, b);
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, walk[i][i]);
  }
  return worst;
}

std::vector<double> column_values(const Matrix& v) {
  return std::vector<double>(v.values().begin(), v.values().end());
}

}  // namespace

void LocationInstance::validate() const {
  if (points.empty()) throw DimensionError("location: at least one demand point is required");
  const std::size_t n = dimension();
  if (n == 0) throw DimensionError("location: points must have at least one coordinate");
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != n)
      throw DimensionError("location: point " + std::to_string(j) + " has wrong length");
    for (double v : points[j]) require_finite(v, "location: point coordinate");
  }
  if (weights.size() != points.size())
    throw DimensionError("location: need one weight per demand point");
  for (double w : weights) require_finite(w, "location: weight");
  if (!constraints.empty()) {
    if (constraints.size() != n) throw DimensionError("location: B must be n x n");
    for (const auto& row : constraints) {
      if (row.size() != n) throw DimensionError("location: B must be n x n");
      for (double v : row)
        if (std::isnan(v) || v == -kNegInf) throw DomainError("location: B entries must be finite or -inf");
    }
  }
  if (!lower.empty()) {
    if (lower.size() != n) throw DimensionError("location: g must have length n");
    for (double v : lower)
      if (std::isnan(v) || v == -kNegInf) throw DomainError("location: g entries must be finite or -inf");
  }
  if (!upper.empty()) {
    if (upper.size() != n) throw DimensionError("location: h must have length n");
    for (double v : upper) require_finite(v, "location: h entry");
  }
}

double chebyshev_distance(std::span<const double> r, std::span<const double> s) {
  if (r.size() != s.size()) throw DimensionError("chebyshev_distance: length mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) d = std::max(d, std::abs(r[i] - s[i]));
  return d;
}

EnclosingCorners build_pq(const RealMatrix& points, std::span<const double> weights) {
  if (points.empty()) throw DimensionError("build_pq: at least one point is required");
  if (weights.size() != points.size()) throw DimensionError("build_pq: one weight per point");
  const std::size_t n = points.front().size();
  EnclosingCorners c{std::vector<double>(n, kNegInf),
                     std::vector<double>(n, std::numeric_limits<double>::infinity())};
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != n) throw DimensionError("build_pq: ragged points");
    for (std::size_t i = 0; i < n; ++i) {
      c.p[i] = std::max(c.p[i], points[j][i] + weights[j]);
      c.q[i] = std::min(c.q[i], points[j][i] - weights[j]);
    }
  }
  return c;
}

double location_objective(const LocationInstance& inst, std::span<const double> x) {
  double best = kNegInf;
  for (std::size_t j = 0; j < inst.points.size(); ++j)
    best = std::max(best, inst.weights[j] + chebyshev_distance(inst.points[j], x));
  return best;
}

ProblemInstance reduce(const LocationInstance& inst) {
  inst.validate();
  constexpr auto kind = SemifieldKind::MaxPlus;
  const auto [p, q] = build_pq(inst.points, inst.weights);
  ProblemInstance out{Matrix::column(kind, p), Matrix::column(kind, q)};
  if (!inst.constraints.empty()) out.b = Matrix::from_rows(kind, inst.constraints);
  if (!inst.lower.empty()) out.g = Matrix::column(kind, inst.lower);
  if (!inst.upper.empty()) out.h = Matrix::column(kind, inst.upper);
  return out;
}

RealMatrix closure_entries(const RealMatrix& b) {
  const std::size_t n = b.size();
  for (const auto& row : b)
    if (row.size() != n) throw DimensionError("closure_entries: matrix is not square");
  if (n == 0) return {};
  RealMatrix beta(n, std::vector<double>(n, kNegInf));
  RealMatrix walk = b;
  for (std::size_t k = 1; k < n; ++k) {
    if (k > 1) walk = maxplus_product(walk, b);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) beta[i][j] = std::max(beta[i][j], walk[i][j]);
  }
  for (std::size_t i = 0; i < n; ++i) beta[i][i] = std::max(beta[i][i], 0.0);
  return beta;
}

LocationResult solve_location(const LocationInstance& inst) {
  inst.validate();
  const std::size_t n = inst.dimension();
  const auto [p, q] = build_pq(inst.points, inst.weights);
  const bool has_g = !inst.lower.empty();
  const bool has_h = !inst.upper.empty();

  RealMatrix b_star;
  if (inst.constraints.empty()) {
    b_star = closure_entries(RealMatrix(n, std::vector<double>(n, kNegInf)));
  } else {
    const double cycle = max_cycle_weight(inst.constraints);
    if (cycle > 0.0)
      return InfeasibilityReport{InfeasibilityReason::TrExceedsOne,
                                 Scalar(SemifieldKind::MaxPlus, cycle)};
    b_star = closure_entries(inst.constraints);
  }

  if (has_g && has_h) {
    double gap = kNegInf;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        gap = std::max(gap, b_star[i][j] - inst.upper[i] + inst.lower[j]);
    if (gap > 0.0)
      return InfeasibilityReport{InfeasibilityReason::BoundsIncompatible,
                                 Scalar(SemifieldKind::MaxPlus, gap)};
  }

  double theta = kNegInf;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double s = b_star[i][j];
      theta = std::max(theta, (s - q[i] + p[j]) / 2);
      if (has_h) theta = std::max(theta, s - inst.upper[i] + p[j]);
      if (has_g) theta = std::max(theta, s - q[i] + inst.lower[j]);
    }

  LocationSolution sol{theta, b_star, std::vector<double>(n), std::vector<double>(n),
                       std::vector<double>(n), std::vector<double>(n), p, q};
  for (std::size_t j = 0; j < n; ++j) {
    sol.u_lower[j] = has_g ? std::max(inst.lower[j], p[j] - theta) : p[j] - theta;
    double via_h = kNegInf;
    double via_q = kNegInf;
    for (std::size_t i = 0; i < n; ++i) {
      if (has_h) via_h = std::max(via_h, b_star[i][j] - inst.upper[i]);
      via_q = std::max(via_q, b_star[i][j] - q[i]);
    }
    sol.u_upper[j] = theta - via_q;
    if (has_h) sol.u_upper[j] = std::min(-via_h, sol.u_upper[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    double lo = kNegInf;
    double hi = kNegInf;
    for (std::size_t j = 0; j < n; ++j) {
      lo = std::max(lo, b_star[i][j] + sol.u_lower[j]);
      hi = std::max(hi, b_star[i][j] + sol.u_upper[j]);
    }
    sol.x_lower[i] = lo;
    sol.x_upper[i] = hi;
  }
  return sol;
}

LocationSolution to_location_solution(const SolutionSet& sol, const ProblemInstance& reduced) {
  const std::size_t n = sol.generator.rows();
  RealMatrix b_star(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b_star[i][j] = sol.generator.value(i, j);
  return {sol.theta.value(),         b_star,
          column_values(sol.u_lo),   column_values(sol.u_hi),
          column_values(sol.x_lo),   column_values(sol.x_hi),
          column_values(reduced.p),  column_values(reduced.q)};
}

}  // namespace tropopt
