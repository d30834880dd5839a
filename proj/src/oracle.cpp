#include "tropopt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tropopt/error.hpp"
#include "tropopt/format.hpp"

namespace tropopt {

namespace {

std::size_t axis_points(double lo, double hi, double step) {
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

double max_abs_finite(const Matrix& m, double acc) {
  for (double v : m.values())
    if (std::isfinite(v)) acc = std::max(acc, std::abs(v));
  return acc;
}

}  // namespace

std::size_t grid_point_count(const GridSpec& grid) {
  if (grid.lower.size() != grid.upper.size() || grid.lower.empty())
    throw GridGuardError("grid bounds must be non-empty and of equal length");
  if (!(grid.step > 0.0) || !std::isfinite(grid.step))
    throw GridGuardError("grid step must be positive");
  double total = 1.0;
  for (std::size_t i = 0; i < grid.lower.size(); ++i) {
    if (!std::isfinite(grid.lower[i]) || !std::isfinite(grid.upper[i]))
      throw GridGuardError("grid bounds must be finite");
    if (grid.lower[i] > grid.upper[i])
      throw GridGuardError("grid lower bound exceeds upper bound on axis " + std::to_string(i));
    total *= static_cast<double>(axis_points(grid.lower[i], grid.upper[i], grid.step));
    if (total > static_cast<double>(kMaxGridPoints)) {
      throw GridGuardError("grid has more than " + std::to_string(kMaxGridPoints) +
                           " points; use a coarser step or tighter bounds");
    }
  }
  return static_cast<std::size_t>(total);
}

GridSpec default_grid(const ProblemInstance& inst, double step) {
  const SemifieldKind kind = inst.kind();
  if (kind != SemifieldKind::MaxPlus && kind != SemifieldKind::MinPlus)
    throw PreconditionError("default grid needs an additive semifield; give explicit bounds");
  const std::size_t n = inst.dimension();

  double r = max_abs_finite(inst.q, max_abs_finite(inst.p, 0.0));
  if (inst.g) r = max_abs_finite(*inst.g, r);
  if (inst.h) r = max_abs_finite(*inst.h, r);
  const double b = inst.b ? max_abs_finite(*inst.b, 0.0) : 0.0;
  // |theta| <= 2r + (n-1)b, and optimizers satisfy p - theta <= x <= q + theta.
  const double theta_bound = 2.0 * r + static_cast<double>(n - 1) * b;
  const double half_width = r + theta_bound;
  const double outer = std::ceil(half_width / step) * step;

  // Numeric direction of the semifield order.
  const bool ascending = kind == SemifieldKind::MaxPlus;
  GridSpec grid{std::vector<double>(n, -outer), std::vector<double>(n, outer), step};
  for (std::size_t i = 0; i < n; ++i) {
    if (inst.g) {
      const double gi = inst.g->value(i, 0);
      if (std::isfinite(gi)) (ascending ? grid.lower[i] : grid.upper[i]) = gi;
    }
    if (inst.h) (ascending ? grid.upper[i] : grid.lower[i]) = inst.h->value(i, 0);
  }
  return grid;
}

OracleResult brute_force_min(const ProblemInstance& inst, const GridSpec& grid,
                             const Tolerance& tol) {
  inst.validate_shapes();
  const std::size_t n = inst.dimension();
  if (n > kMaxOracleDimension) {
    throw GridGuardError("brute force supports dimension <= " +
                         std::to_string(kMaxOracleDimension) + ", got " + std::to_string(n));
  }
  if (grid.lower.size() != n) throw DimensionError("grid dimension does not match instance");
  grid_point_count(grid);

  const SemifieldKind kind = inst.kind();
  const double eps = tol.for_kind(kind);
  for (std::size_t i = 0; i < n; ++i) {
    detail::validate(kind, grid.lower[i]);
    detail::validate(kind, grid.upper[i]);
  }

  std::vector<std::size_t> extent(n);
  for (std::size_t i = 0; i < n; ++i)
    extent[i] = axis_points(grid.lower[i], grid.upper[i], grid.step);

  const double zero = detail::zero(kind);
  std::vector<double> p(inst.p.values().begin(), inst.p.values().end());
  std::vector<double> q_conj(n);
  for (std::size_t i = 0; i < n; ++i) q_conj[i] = detail::inv(kind, inst.q.value(i, 0));

  OracleResult out;
  double best = zero;
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  for (;;) {
    bool regular = true;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = grid.lower[i] + static_cast<double>(idx[i]) * grid.step;
      regular = regular && !detail::is_zero(kind, x[i]);
    }
    ++out.evaluated;

    bool feasible = regular;
    for (std::size_t i = 0; i < n && feasible; ++i) {
      if (inst.g && !detail::leq(kind, inst.g->value(i, 0), x[i], eps)) feasible = false;
      if (inst.h && !detail::leq(kind, x[i], inst.h->value(i, 0), eps)) feasible = false;
      if (inst.b) {
        double bx = zero;
        for (std::size_t j = 0; j < n; ++j)
          bx = detail::add(kind, bx, detail::mul(kind, inst.b->value(i, j), x[j]));
        if (!detail::leq(kind, bx, x[i], eps)) feasible = false;
      }
    }

    if (feasible) {
      ++out.feasible;
      double value = zero;
      for (std::size_t i = 0; i < n; ++i) {
        const double xi_conj = detail::inv(kind, x[i]);
        value = detail::add(kind, value, detail::mul(kind, xi_conj, p[i]));
        value = detail::add(kind, value, detail::mul(kind, q_conj[i], x[i]));
      }
      if (!out.minimum || !detail::leq(kind, best, value, eps)) {
        best = value;
        out.minimum = Scalar(kind, value);
        out.argmins.clear();
        out.argmins.push_back(Matrix::column(kind, x));
      } else if (detail::approx_equal(kind, value, best, eps)) {
        out.argmins.push_back(Matrix::column(kind, x));
      }
    }

    // Odometer, last axis fastest.
    std::size_t axis = n;
    while (axis > 0) {
      --axis;
      if (++idx[axis] < extent[axis]) break;
      idx[axis] = 0;
      if (axis == 0) return out;
    }
  }
}

}  // namespace tropopt
