#include <limits>

#include "doctest.h"
#include "reference.hpp"
#include "support.hpp"
#include "tropopt/error.hpp"
#include "tropopt/oracle.hpp"

using namespace tropopt;
using testing_support::Gen;

namespace {
const auto MP = SemifieldKind::MaxPlus;
const Matrix kP = Matrix::column(MP, {3, 14});
const Matrix kQ = Matrix::column(MP, {-12, -4});
const Matrix kG = Matrix::column(MP, {2, -8});
const Matrix kH = Matrix::column(MP, {6, 8});
const Matrix kB = Matrix::from_rows(MP, {{0, -4}, {-8, -6}});
}  // namespace

TEST_CASE("grid point count and guard") {
  CHECK(grid_point_count({{0, 0}, {1, 2}, 0.5}) == 3 * 5);
  CHECK(grid_point_count({{0}, {0}, 0.5}) == 1);
  CHECK_THROWS_AS(grid_point_count({{0}, {1}, 0}), GridGuardError);
  CHECK_THROWS_AS(grid_point_count({{1}, {0}, 0.5}), GridGuardError);
  CHECK_THROWS_AS(grid_point_count({{0, 0}, {1}, 0.5}), GridGuardError);
  CHECK_THROWS_AS(grid_point_count({{0, 0, 0}, {100, 100, 100}, 0.5}), GridGuardError);
}

TEST_CASE("general worked example on a square grid") {
  const ProblemInstance inst{kP, kQ, kG, kH, kB};
  const auto r = brute_force_min(inst, {{-15, -15}, {15, 15}, 0.5});
  REQUIRE(r.minimum);
  CHECK(*r.minimum == Scalar(MP, 14));
  REQUIRE(r.argmins.size() == 13);
  for (std::size_t k = 0; k < r.argmins.size(); ++k)
    CHECK(r.argmins[k] == Matrix::column(MP, {2, 0.5 * double(k)}));
  CHECK(r.evaluated == 61 * 61);
}

TEST_CASE("unconstrained worked example on a square grid") {
  const auto r = brute_force_min(ProblemInstance{kP, kQ}, {{-15, -15}, {15, 15}, 0.5});
  REQUIRE(r.minimum);
  CHECK(*r.minimum == Scalar(MP, 9));
  CHECK(r.argmins.size() == 7);
}

TEST_CASE("empty feasible set") {
  const ProblemInstance inst{kP, kQ, Matrix::column(MP, {2, 9}), kH};
  const auto r = brute_force_min(inst, {{-15, -15}, {15, 15}, 0.5});
  CHECK_FALSE(r.minimum);
  CHECK(r.argmins.empty());
  CHECK(r.feasible == 0);
}

TEST_CASE("dimension guard") {
  const Matrix v = Matrix::column(MP, {0, 0, 0, 0});
  CHECK_THROWS_AS(brute_force_min(ProblemInstance{v, v}, {{0, 0, 0, 0}, {1, 1, 1, 1}, 0.5}),
                  GridGuardError);
  CHECK_THROWS_AS(brute_force_min(ProblemInstance{kP, kQ}, {{0}, {1}, 0.5}), DimensionError);
}

TEST_CASE("default grid") {
  const auto box = default_grid(ProblemInstance{kP, kQ, kG, kH, kB});
  CHECK(box.lower == std::vector<double>{2, -8});
  CHECK(box.upper == std::vector<double>{6, 8});
  const auto free = default_grid(ProblemInstance{kP, kQ});
  const auto sol = solve_unconstrained(kP, kQ);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(free.lower[i] <= sol.x_lo.value(i, 0));
    CHECK(free.upper[i] >= sol.x_hi.value(i, 0));
  }
  const auto mt = SemifieldKind::MaxTimes;
  CHECK_THROWS_AS(default_grid(ProblemInstance{Matrix::column(mt, {1}), Matrix::column(mt, {1})}),
                  PreconditionError);
}

TEST_CASE("oracle agrees with an independent grid search") {
  Gen gen(51);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    Matrix g(MP, n, 1), h(MP, n, 1);
    testing_support::ordered_pair(gen, MP, n, g, h);
    const ProblemInstance inst{gen.regular(MP, n), gen.regular(MP, n), g, h, gen.cycle_free(MP, n)};
    std::vector<double> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) lo[i] = g.value(i, 0), hi[i] = h.value(i, 0);
    const auto mine = reference::grid_min(inst, lo, hi, 0.5);
    const auto theirs = brute_force_min(inst, {lo, hi, 0.5});
    REQUIRE(mine.minimum.has_value() == theirs.minimum.has_value());
    if (!mine.minimum) continue;
    CHECK(theirs.minimum->value() == *mine.minimum);
    REQUIRE(theirs.argmins.size() == mine.argmins.size());
    for (std::size_t k = 0; k < mine.argmins.size(); ++k)
      CHECK(theirs.argmins[k] == Matrix::column(MP, mine.argmins[k]));
  }
}

TEST_CASE("oracle over a multiplicative semifield") {
  const auto mt = SemifieldKind::MaxTimes;
  const Matrix p = Matrix::column(mt, {8, 2});
  const Matrix q = Matrix::column(mt, {2, 1});
  // Objective max(p_i / x_i, x_i / q_i); the minimum is attained at x = (4, 1).
  const auto r = brute_force_min(ProblemInstance{p, q}, {{1, 1}, {8, 8}, 0.5});
  REQUIRE(r.minimum);
  CHECK(r.minimum->value() == 2);
  CHECK(solve_unconstrained(p, q).theta.value() == 2);
}
