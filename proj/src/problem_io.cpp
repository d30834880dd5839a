#include "tropopt/problem_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "tropopt/error.hpp"

namespace tropopt {

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

double parse_number(const json& v, const std::string& where) {
  if (v.is_number()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError(where + ": number is not finite");
    return d;
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "-inf") return -kInf;
    if (s == "+inf" || s == "inf") return kInf;
    throw ParseError(where + ": unexpected string '" + s + "' (only \"-inf\"/\"+inf\" allowed)");
  }
  throw ParseError(where + ": expected a number");
}

std::vector<double> parse_vector(const json& doc, const std::string& field) {
  const json& v = doc.at(field);
  if (!v.is_array() || v.empty()) throw ParseError("field '" + field + "': expected a non-empty array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(parse_number(v[i], "field '" + field + "' position " + std::to_string(i)));
  return out;
}

RealMatrix parse_matrix(const json& doc, const std::string& field) {
  const json& v = doc.at(field);
  if (!v.is_array() || v.empty()) throw ParseError("field '" + field + "': expected an array of rows");
  RealMatrix out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.empty())
      throw ParseError("field '" + field + "' row " + std::to_string(i) + ": expected an array");
    if (row.size() != v[0].size())
      throw ParseError("field '" + field + "' row " + std::to_string(i) + ": ragged row");
    std::vector<double> r;
    for (std::size_t j = 0; j < row.size(); ++j) {
      r.push_back(parse_number(row[j], "field '" + field + "' row " + std::to_string(i) +
                                           " column " + std::to_string(j)));
    }
    out.push_back(std::move(r));
  }
  return out;
}

template <class F>
auto with_field(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("field '" + field + "': " + e.what());
  }
}

Matrix column_field(const json& doc, const std::string& field, SemifieldKind kind) {
  auto values = parse_vector(doc, field);
  return with_field(field, [&] { return Matrix::column(kind, values); });
}

Matrix matrix_field(const json& doc, const std::string& field, SemifieldKind kind) {
  auto rows = parse_matrix(doc, field);
  return with_field(field, [&] { return Matrix::from_rows(kind, rows); });
}

void reject_unknown(const json& doc, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : doc.items())
    if (!allowed.count(key)) throw ParseError("unknown field '" + key + "'");
}

void require_fields(const json& doc, std::initializer_list<const char*> fields, ProblemType type) {
  for (const char* f : fields)
    if (!doc.contains(f)) {
      throw ParseError("field '" + std::string(f) + "' is required for problem '" +
                       std::string(to_string(type)) + "'");
    }
}

json vector_json(std::span<const double> v) {
  json a = json::array();
  for (double x : v) a.push_back(number_to_json(x));
  return a;
}

json matrix_json(const Matrix& m) {
  if (m.cols() == 1) return vector_json(m.values());
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.values().subspan(i * m.cols(), m.cols())));
  return a;
}

json matrix_json(const RealMatrix& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(vector_json(row));
  return a;
}

}  // namespace

std::string_view to_string(ProblemType type) {
  switch (type) {
    case ProblemType::Unconstrained: return "unconstrained";
    case ProblemType::Linear: return "linear";
    case ProblemType::Box: return "box";
    case ProblemType::General: return "general";
    case ProblemType::Location: return "location";
  }
  return "?";
}

ProblemType parse_problem_type(std::string_view tag) {
  for (auto t : {ProblemType::Unconstrained, ProblemType::Linear, ProblemType::Box,
                 ProblemType::General, ProblemType::Location})
    if (to_string(t) == tag) return t;
  throw ParseError("field 'problem': unknown problem type '" + std::string(tag) + "'");
}

ProblemInstance ProblemFile::as_instance() const {
  if (type == ProblemType::Location) return reduce(*location);
  return *instance;
}

nlohmann::json number_to_json(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "+inf";
  if (v == std::trunc(v) && std::abs(v) < 9007199254740992.0) return static_cast<std::int64_t>(v);
  return v;
}

ProblemFile parse_problem(const nlohmann::json& doc, std::optional<SemifieldKind> semifield) {
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");
  if (!doc.contains("problem") || !doc["problem"].is_string())
    throw ParseError("field 'problem': required string");
  const ProblemType type = parse_problem_type(doc["problem"].get<std::string>());

  if (type == ProblemType::Location) {
    reject_unknown(doc, {"problem", "semifield", "points", "weights", "B", "g", "h"});
    if (doc.contains("semifield") && doc["semifield"] != "max-plus")
      throw ParseError("field 'semifield': location problems are max-plus");
    require_fields(doc, {"points", "weights"}, type);
    LocationInstance loc;
    loc.points = parse_matrix(doc, "points");
    loc.weights = parse_vector(doc, "weights");
    if (doc.contains("B")) loc.constraints = parse_matrix(doc, "B");
    if (doc.contains("g")) loc.lower = parse_vector(doc, "g");
    if (doc.contains("h")) loc.upper = parse_vector(doc, "h");
    with_field("points", [&] { loc.validate(); });
    return {type, SemifieldKind::MaxPlus, std::nullopt, std::move(loc)};
  }

  reject_unknown(doc, {"problem", "semifield", "p", "q", "g", "h", "B"});
  SemifieldKind kind = SemifieldKind::MaxPlus;
  if (doc.contains("semifield")) {
    if (!doc["semifield"].is_string()) throw ParseError("field 'semifield': expected a string");
    kind = with_field("semifield", [&] { return parse_semifield(doc["semifield"].get<std::string>()); });
  }
  if (semifield) kind = *semifield;

  switch (type) {
    case ProblemType::Unconstrained: require_fields(doc, {"p", "q"}, type); break;
    case ProblemType::Linear: require_fields(doc, {"p", "q", "B"}, type); break;
    case ProblemType::Box: require_fields(doc, {"p", "q", "g", "h"}, type); break;
    default: require_fields(doc, {"p", "q"}, type); break;
  }
  auto forbid = [&](const char* f) {
    if (doc.contains(f))
      throw ParseError("field '" + std::string(f) + "' is not allowed for problem '" +
                       std::string(to_string(type)) + "'");
  };
  if (type == ProblemType::Unconstrained) { forbid("B"); forbid("g"); forbid("h"); }
  if (type == ProblemType::Linear) { forbid("g"); forbid("h"); }
  if (type == ProblemType::Box) forbid("B");

  ProblemInstance inst{column_field(doc, "p", kind), column_field(doc, "q", kind)};
  if (doc.contains("g")) inst.g = column_field(doc, "g", kind);
  if (doc.contains("h")) inst.h = column_field(doc, "h", kind);
  if (doc.contains("B")) inst.b = matrix_field(doc, "B", kind);
  with_field("p", [&] { inst.validate_shapes(); });
  return {type, kind, std::move(inst), std::nullopt};
}

ProblemFile parse_problem_text(std::string_view text, std::optional<SemifieldKind> semifield) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(doc, semifield);
}

ProblemFile load_problem(const std::filesystem::path& path, std::optional<SemifieldKind> semifield) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str(), semifield);
}

nlohmann::json to_json(const ProblemFile& file) {
  json doc;
  doc["problem"] = std::string(to_string(file.type));
  if (file.type == ProblemType::Location) {
    const auto& loc = *file.location;
    doc["points"] = matrix_json(loc.points);
    doc["weights"] = vector_json(loc.weights);
    if (!loc.constraints.empty()) doc["B"] = matrix_json(loc.constraints);
    if (!loc.lower.empty()) doc["g"] = vector_json(loc.lower);
    if (!loc.upper.empty()) doc["h"] = vector_json(loc.upper);
    return doc;
  }
  const auto& inst = *file.instance;
  doc["semifield"] = std::string(to_string(file.kind));
  doc["p"] = matrix_json(inst.p);
  doc["q"] = matrix_json(inst.q);
  if (inst.g) doc["g"] = matrix_json(*inst.g);
  if (inst.h) doc["h"] = matrix_json(*inst.h);
  if (inst.b) doc["B"] = matrix_json(*inst.b);
  return doc;
}

std::string serialize_problem(const ProblemFile& file) { return to_json(file).dump(2) + "\n"; }

ProblemOutcome solve_problem(const ProblemFile& file, const Tolerance& tol) {
  auto widen = [](SolveResult r) -> ProblemOutcome {
    if (auto* s = std::get_if<SolutionSet>(&r)) return std::move(*s);
    return std::get<InfeasibilityReport>(r);
  };
  if (file.type == ProblemType::Location) {
    auto r = solve_location(*file.location);
    if (auto* s = std::get_if<LocationSolution>(&r)) return std::move(*s);
    return std::get<InfeasibilityReport>(r);
  }
  const auto& inst = *file.instance;
  switch (file.type) {
    case ProblemType::Unconstrained: return solve_unconstrained(inst.p, inst.q, tol);
    case ProblemType::Linear: return widen(solve_linear_constrained(*inst.b, inst.p, inst.q, tol));
    case ProblemType::Box:
      return widen(solve_box_constrained(inst.p, inst.q, *inst.g, *inst.h, tol));
    default: return widen(solve_general(inst, tol));
  }
}

nlohmann::json make_report(const ProblemFile& file, const ProblemOutcome& outcome) {
  json r;
  r["problem"] = std::string(to_string(file.type));
  r["semifield"] = std::string(to_string(file.kind));
  if (auto* bad = std::get_if<InfeasibilityReport>(&outcome)) {
    r["status"] = "infeasible";
    r["reason"] = std::string(to_string(bad->reason));
    r["detail"] = number_to_json(bad->detail.value());
    return r;
  }
  r["status"] = "optimal";
  if (auto* s = std::get_if<SolutionSet>(&outcome)) {
    r["theta"] = number_to_json(s->theta.value());
    r["generator"] = matrix_json(s->generator);
    r["u_lo"] = matrix_json(s->u_lo);
    r["u_hi"] = matrix_json(s->u_hi);
    r["x_lo"] = matrix_json(s->x_lo);
    r["x_hi"] = matrix_json(s->x_hi);
    return r;
  }
  const auto& loc = std::get<LocationSolution>(outcome);
  r["theta"] = number_to_json(loc.theta);
  r["p"] = vector_json(loc.p);
  r["q"] = vector_json(loc.q);
  r["b_star"] = matrix_json(loc.b_star);
  r["u_lo"] = vector_json(loc.u_lower);
  r["u_hi"] = vector_json(loc.u_upper);
  r["x_lo"] = vector_json(loc.x_lower);
  r["x_hi"] = vector_json(loc.x_upper);
  return r;
}

}  // namespace tropopt
