#pragma once

/// \file
/// JSON problem files and solution reports.
///
/// Optimization problem:
///
///     { "problem": "general", "semifield": "max-plus",
///       "p": [3, 14], "q": [-12, -4], "g": [2, -8], "h": [6, 8],
///       "B": [[0, -4], [-8, -6]] }
///
/// `problem` is one of unconstrained (p, q), linear (p, q, B), box (p, q, g,
/// h) or general (p, q and any of B, g, h). The semifield zero is written as
/// the string "-inf" (max-plus) or "+inf" (min-plus, min-times); max-times
/// uses the number 0.
///
/// Location problem (always max-plus, ordinary arithmetic):
///
///     { "problem": "location", "points": [[-7, 12], [2, 10]],
///       "weights": [2, 1], "B": [[0, -4], [-8, -6]], "g": [2, -8], "h": [6, 8] }
///
/// with optional B ("-inf" = no constraint), g and h.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "tropopt/location.hpp"
#include "tropopt/optimization.hpp"

namespace tropopt {

enum class ProblemType { Unconstrained, Linear, Box, General, Location };

std::string_view to_string(ProblemType type);
ProblemType parse_problem_type(std::string_view tag);

struct ProblemFile {
  ProblemType type;
  SemifieldKind kind;
  std::optional<ProblemInstance> instance;   ///< all types but Location
  std::optional<LocationInstance> location;  ///< Location only

  /// The max-plus reduction for Location, the instance otherwise.
  ProblemInstance as_instance() const;
};

/// Throws ParseError naming the offending field. `semifield` overrides the
/// file's tag (ignored for location problems).
ProblemFile parse_problem(const nlohmann::json& doc,
                          std::optional<SemifieldKind> semifield = std::nullopt);
ProblemFile parse_problem_text(std::string_view text,
                               std::optional<SemifieldKind> semifield = std::nullopt);
ProblemFile load_problem(const std::filesystem::path& path,
                         std::optional<SemifieldKind> semifield = std::nullopt);

/// Canonical JSON form; parse(serialize(f)) == f.
nlohmann::json to_json(const ProblemFile& file);
std::string serialize_problem(const ProblemFile& file);

using ProblemOutcome = std::variant<SolutionSet, LocationSolution, InfeasibilityReport>;

/// Dispatches to the solver matching the problem type.
ProblemOutcome solve_problem(const ProblemFile& file, const Tolerance& tol = {});

/// Report with "status" ("optimal" / "infeasible") and either the solution
/// fields or "reason" and "detail".
nlohmann::json make_report(const ProblemFile& file, const ProblemOutcome& outcome);

/// Integral doubles become JSON integers, infinities the strings
/// "-inf"/"+inf", everything else a JSON float (shortest round-trip form).
nlohmann::json number_to_json(double v);

}  // namespace tropopt
