#pragma once

/// \file
/// Subcommands of the `tropopt` tool. Each returns the process exit code:
/// 0 optimal / agreement, 1 infeasible / disagreement, 2 input error.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tropopt/semifield.hpp"

namespace tropopt {

enum ExitCode : int { kExitOk = 0, kExitInfeasible = 1, kExitInputError = 2 };

/// Environment variable that overrides the comparison epsilon when
/// --epsilon is not given.
inline constexpr const char* kEpsilonEnv = "TROPOPT_EPSILON";

struct CommandOptions {
  std::optional<SemifieldKind> semifield;
  std::optional<double> epsilon;
  double grid_step = 0.5;
  std::vector<double> grid_lo;
  std::vector<double> grid_hi;
};

/// --epsilon wins, then TROPOPT_EPSILON, then the per-kind default.
Tolerance resolve_tolerance(const CommandOptions& opts);

int run_solve(const std::string& path, const CommandOptions& opts, std::ostream& out,
              std::ostream& err);
int run_verify(const std::string& path, const CommandOptions& opts, std::ostream& out,
               std::ostream& err);
int run_plot(const std::string& path, const CommandOptions& opts, std::ostream& out,
             std::ostream& err);

}  // namespace tropopt
