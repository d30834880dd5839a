#include "tropopt/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "tropopt/error.hpp"
#include "tropopt/format.hpp"

namespace tropopt {

namespace {

constexpr double kPixelWidth = 480.0;

double dot(const Point2& a, const Point2& b) { return a[0] * b[0] + a[1] * b[1]; }

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Intersection of a.x = c with n.x = d by Cramer's rule; one rounding per
// coordinate keeps lattice intersections exact.
std::optional<Point2> intersect(const Point2& a, double c, const Point2& n, double d) {
  const double det = a[0] * n[1] - a[1] * n[0];
  if (det == 0.0) return std::nullopt;
  return Point2{(c * n[1] - a[1] * d) / det + 0.0, (a[0] * d - n[0] * c) / det + 0.0};
}

Point2 segment_line_hit(const Point2& p, const Point2& q, const HalfPlane& h) {
  const Point2 n{q[1] - p[1], p[0] - q[0]};
  auto hit = intersect(h.a, h.c, n, dot(n, p));
  return hit ? *hit : p;
}

std::vector<Point2> tidy_polygon(std::vector<Point2> pts) {
  bool changed = true;
  while (changed && pts.size() >= 2) {
    changed = false;
    for (std::size_t i = 0; i < pts.size() && pts.size() >= 2; ++i) {
      const auto& cur = pts[i];
      const auto& nxt = pts[(i + 1) % pts.size()];
      if (cur == nxt) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
    if (changed || pts.size() < 3) continue;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& prev = pts[(i + pts.size() - 1) % pts.size()];
      const auto& nxt = pts[(i + 1) % pts.size()];
      if (cross(prev, pts[i], nxt) == 0.0) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (pts.size() < 3) return {};
  auto first = std::min_element(pts.begin(), pts.end());
  std::rotate(pts.begin(), first, pts.end());
  return pts;
}

bool collinear(const std::vector<Point2>& pts) {
  if (pts.size() < 3) return true;
  const Point2& o = pts.front();
  const Point2* far = nullptr;
  for (const auto& p : pts)
    if (p != o) { far = &p; break; }
  if (!far) return true;
  const double scale = std::abs((*far)[0] - o[0]) + std::abs((*far)[1] - o[1]);
  for (const auto& p : pts) {
    const double s = scale * (std::abs(p[0] - o[0]) + std::abs(p[1] - o[1]));
    if (std::abs(cross(o, *far, p)) > 1e-12 * s) return false;
  }
  return true;
}

struct Viewport {
  Point2 lo;
  Point2 hi;
};

Viewport fit(const std::vector<Point2>& pts) {
  Point2 lo{pts.front()};
  Point2 hi{pts.front()};
  for (const auto& p : pts)
    for (int k = 0; k < 2; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  for (int k = 0; k < 2; ++k) {
    const double extent = hi[k] - lo[k];
    const double margin = extent > 0.0 ? 0.1 * extent : 1.0;
    lo[k] -= margin;
    hi[k] += margin;
  }
  return {lo, hi};
}

// Portion of a.x = c inside the viewport.
std::optional<std::array<Point2, 2>> clip_line(const HalfPlane& h, const Viewport& v) {
  std::vector<Point2> hits;
  const std::array<std::pair<Point2, double>, 4> edges{{
      {{1.0, 0.0}, v.lo[0]}, {{1.0, 0.0}, v.hi[0]}, {{0.0, 1.0}, v.lo[1]}, {{0.0, 1.0}, v.hi[1]}}};
  for (const auto& [n, d] : edges) {
    auto p = intersect(h.a, h.c, n, d);
    if (!p) continue;
    const double slack = 1e-9 * (v.hi[0] - v.lo[0] + v.hi[1] - v.lo[1]);
    if ((*p)[0] >= v.lo[0] - slack && (*p)[0] <= v.hi[0] + slack && (*p)[1] >= v.lo[1] - slack &&
        (*p)[1] <= v.hi[1] + slack)
      hits.push_back(*p);
  }
  if (hits.size() < 2) return std::nullopt;
  auto [mn, mx] = std::minmax_element(hits.begin(), hits.end());
  if (*mn == *mx) return std::nullopt;
  return std::array<Point2, 2>{*mn, *mx};
}

Point2 point_of(const Matrix& v) { return {v.value(0, 0), v.value(1, 0)}; }

bool finite_point(const Point2& p) { return std::isfinite(p[0]) && std::isfinite(p[1]); }

class SvgWriter {
 public:
  explicit SvgWriter(double label_size) : label_size_(label_size) {}

  void line(const char* cls, const Point2& a, const Point2& b) {
    body_ << "<line class=\"" << cls << "\" x1=\"" << num(a[0]) << "\" y1=\"" << num(a[1])
          << "\" x2=\"" << num(b[0]) << "\" y2=\"" << num(b[1]) << "\"/>\n";
  }
  void rect(const char* cls, const Point2& a, const Point2& b) {
    const Point2 lo{std::min(a[0], b[0]), std::min(a[1], b[1])};
    const Point2 hi{std::max(a[0], b[0]), std::max(a[1], b[1])};
    body_ << "<rect class=\"" << cls << "\" x=\"" << num(lo[0]) << "\" y=\"" << num(lo[1])
          << "\" width=\"" << num(hi[0] - lo[0]) << "\" height=\"" << num(hi[1] - lo[1]) << "\"/>\n";
  }
  void polygon(const char* cls, const std::vector<Point2>& pts) {
    body_ << "<polygon class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      body_ << (i ? " " : "") << num(pts[i][0]) << ',' << num(pts[i][1]);
    body_ << "\"/>\n";
  }
  void circle(const char* cls, const Point2& c, double r) {
    body_ << "<circle class=\"" << cls << "\" cx=\"" << num(c[0]) << "\" cy=\"" << num(c[1])
          << "\" r=\"" << num(r) << "\"/>\n";
  }
  void label(const std::string& text, const Point2& at) {
    labels_ << "<text x=\"" << num(at[0] + label_size_ * 0.4) << "\" y=\"" << num(-at[1] - label_size_ * 0.4)
            << "\">" << text << "</text>\n";
  }

  std::string finish(const Viewport& v, const std::string& title) const {
    const double w = v.hi[0] - v.lo[0];
    const double h = v.hi[1] - v.lo[1];
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kPixelWidth) << "\" height=\""
        << num(std::round(kPixelWidth * h / w)) << "\" viewBox=\"" << num(v.lo[0]) << ' '
        << num(-v.hi[1]) << ' ' << num(w) << ' ' << num(h) << "\">\n"
        << "<title>" << title << "</title>\n"
        << "<style>\n"
           "line, rect, polygon, circle { vector-effect: non-scaling-stroke; stroke-width: 1; }\n"
           ".axis { stroke: #888; }\n"
           ".enclosing, .bounds { fill: none; stroke: black; }\n"
           ".bounds { stroke-dasharray: 4 2; }\n"
           ".feasible { fill: #dde8f4; stroke: #4a6f99; }\n"
           ".constraint { stroke: #4a6f99; }\n"
           ".solution { stroke: #c0392b; stroke-width: 3; }\n"
           ".solution-point, .solution-set { fill: #c0392b; stroke: #c0392b; }\n"
           ".demand { fill: black; stroke: none; }\n"
           ".weighted-corner { fill: white; stroke: black; }\n"
           ".weight-diagonal { stroke: black; }\n"
           "text { font-family: sans-serif; font-size: "
        << num(label_size_) << "px; }\n"
        << "</style>\n"
        << "<g transform=\"scale(1,-1)\">\n"
        << body_.str() << "</g>\n"
        << labels_.str() << "</svg>\n";
    return out.str();
  }

 private:
  // Rounded to 1e-9 so clipping and scaling noise does not reach the file.
  static std::string num(double v) {
    if (!std::isfinite(v)) return format_number(v);
    return format_number(std::round(v * 1e9) / 1e9);
  }

  double label_size_;
  std::ostringstream body_;
  std::ostringstream labels_;
};

std::optional<SolutionSet> geometric_solution(const ProblemFile& file, const Tolerance& tol) {
  if (file.type == ProblemType::Location) {
    auto r = solve_general(file.as_instance(), tol);
    if (auto* s = std::get_if<SolutionSet>(&r)) return *s;
    return std::nullopt;
  }
  auto r = solve_problem(file, tol);
  if (auto* s = std::get_if<SolutionSet>(&r)) return *s;
  return std::nullopt;
}

}  // namespace

std::vector<HalfPlane> constraint_half_planes(const Matrix& b) {
  if (b.rows() != 2 || b.cols() != 2) throw DimensionError("constraint_half_planes: B must be 2x2");
  const SemifieldKind kind = b.kind();
  std::vector<HalfPlane> out;
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t j = 1 - i;
    const double bij = b.value(i, j);
    if (detail::is_zero(kind, bij)) continue;
    Point2 a{0.0, 0.0};
    double c = 0.0;
    switch (kind) {
      case SemifieldKind::MaxPlus: a[j] = 1.0; a[i] = -1.0; c = -bij; break;  // b + x_j <= x_i
      case SemifieldKind::MinPlus: a[i] = 1.0; a[j] = -1.0; c = bij; break;   // x_i <= b + x_j
      case SemifieldKind::MaxTimes: a[j] = bij; a[i] = -1.0; break;           // b x_j <= x_i
      case SemifieldKind::MinTimes: a[i] = 1.0; a[j] = -bij; break;           // x_i <= b x_j
    }
    out.push_back({a, c + 0.0});
  }
  return out;
}

std::vector<Point2> clip_rectangle(Point2 lo, Point2 hi, const std::vector<HalfPlane>& planes) {
  std::vector<Point2> poly{{lo[0], lo[1]}, {hi[0], lo[1]}, {hi[0], hi[1]}, {lo[0], hi[1]}};
  for (const auto& h : planes) {
    if (poly.empty()) break;
    std::vector<Point2> next;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const Point2& p = poly[(k + poly.size() - 1) % poly.size()];
      const Point2& q = poly[k];
      const bool p_in = dot(h.a, p) <= h.c;
      const bool q_in = dot(h.a, q) <= h.c;
      if (q_in) {
        if (!p_in) next.push_back(segment_line_hit(p, q, h));
        next.push_back(q);
      } else if (p_in) {
        next.push_back(segment_line_hit(p, q, h));
      }
    }
    poly = std::move(next);
  }
  return tidy_polygon(std::move(poly));
}

std::vector<Point2> solution_set_outline(const SolutionSet& sol) {
  const Matrix& g = sol.generator;
  if (g.rows() != 2) throw DimensionError("solution_set_outline: dimension must be 2");
  if (!is_regular(sol.u_lo) || !is_regular(sol.u_hi)) return {};
  const SemifieldKind kind = g.kind();
  const Point2 a{std::min(sol.u_lo.value(0, 0), sol.u_hi.value(0, 0)),
                 std::min(sol.u_lo.value(1, 0), sol.u_hi.value(1, 0))};
  const Point2 b{std::max(sol.u_lo.value(0, 0), sol.u_hi.value(0, 0)),
                 std::max(sol.u_lo.value(1, 0), sol.u_hi.value(1, 0))};

  auto image = [&](const Point2& u) {
    Point2 x;
    for (std::size_t i = 0; i < 2; ++i)
      x[i] = detail::add(kind, detail::mul(kind, g.value(i, 0), u[0]),
                         detail::mul(kind, g.value(i, 1), u[1]));
    return x;
  };

  const std::array<Point2, 4> corners{{{a[0], a[1]}, {b[0], a[1]}, {b[0], b[1]}, {a[0], b[1]}}};
  std::vector<Point2> path;
  for (std::size_t e = 0; e < 4; ++e) {
    const Point2& from = corners[e];
    const Point2& to = corners[(e + 1) % 4];
    const std::size_t axis = from[0] != to[0] ? 0 : 1;
    const std::size_t other = 1 - axis;
    std::vector<double> params{from[axis]};
    // Where the two terms of row i swap dominance along this edge.
    for (std::size_t i = 0; i < 2; ++i) {
      const double ga = g.value(i, axis);
      const double go = g.value(i, other);
      if (detail::is_zero(kind, ga) || detail::is_zero(kind, go)) continue;
      const double t = detail::mul(kind, detail::mul(kind, detail::inv(kind, ga), go), from[other]);
      if (t > std::min(from[axis], to[axis]) && t < std::max(from[axis], to[axis]))
        params.push_back(t);
    }
    std::sort(params.begin() + 1, params.end());
    if (to[axis] < from[axis]) std::reverse(params.begin() + 1, params.end());
    for (double t : params) {
      Point2 u = from;
      u[axis] = t;
      const Point2 x = image(u);
      if (path.empty() || path.back() != x) path.push_back(x);
    }
  }
  if (path.size() > 1 && path.front() == path.back()) path.pop_back();
  return path;
}

std::string render_svg(const ProblemFile& file, const Tolerance& tol) {
  const ProblemInstance inst = file.as_instance();
  if (inst.dimension() != 2)
    throw DimensionError("plot supports two-dimensional problems only, got dimension " +
                         std::to_string(inst.dimension()));
  const auto sol = geometric_solution(file, tol);

  std::vector<Point2> extent;
  const Point2 p = point_of(inst.p);
  const Point2 q = point_of(inst.q);
  if (finite_point(p)) extent.push_back(p);
  if (finite_point(q)) extent.push_back(q);
  std::optional<Point2> g, h;
  if (inst.g && finite_point(point_of(*inst.g))) g = point_of(*inst.g);
  if (inst.h && finite_point(point_of(*inst.h))) h = point_of(*inst.h);
  if (g) extent.push_back(*g);
  if (h) extent.push_back(*h);
  if (sol) {
    for (const Matrix* v : {&sol->x_lo, &sol->x_hi})
      if (finite_point(point_of(*v))) extent.push_back(point_of(*v));
  }
  if (file.location) {
    const auto& loc = *file.location;
    for (std::size_t j = 0; j < loc.points.size(); ++j) {
      const double w = loc.weights[j];
      extent.push_back({loc.points[j][0] + w, loc.points[j][1] + w});
      extent.push_back({loc.points[j][0] - w, loc.points[j][1] - w});
    }
  }
  const bool additive = inst.kind() == SemifieldKind::MaxPlus || inst.kind() == SemifieldKind::MinPlus;
  if (additive) extent.push_back({0.0, 0.0});
  const Viewport view = fit(extent);
  const double span = std::max(view.hi[0] - view.lo[0], view.hi[1] - view.lo[1]);
  const double radius = span / 120.0;

  SvgWriter svg(span / 30.0);
  if (additive) {
    if (view.lo[1] <= 0.0 && view.hi[1] >= 0.0) svg.line("axis", {view.lo[0], 0.0}, {view.hi[0], 0.0});
    if (view.lo[0] <= 0.0 && view.hi[0] >= 0.0) svg.line("axis", {0.0, view.lo[1]}, {0.0, view.hi[1]});
  }

  const std::vector<HalfPlane> planes = inst.b ? constraint_half_planes(*inst.b) : std::vector<HalfPlane>{};
  if (g && h) {
    const Point2 lo{std::min((*g)[0], (*h)[0]), std::min((*g)[1], (*h)[1])};
    const Point2 hi{std::max((*g)[0], (*h)[0]), std::max((*g)[1], (*h)[1])};
    auto region = clip_rectangle(lo, hi, planes);
    if (!planes.empty() && !region.empty()) svg.polygon("feasible", region);
    svg.rect("bounds", *g, *h);
  }
  for (const auto& plane : planes)
    if (auto seg = clip_line(plane, view)) svg.line("constraint", (*seg)[0], (*seg)[1]);

  if (finite_point(p) && finite_point(q)) svg.rect("enclosing", q, p);

  if (file.location) {
    const auto& loc = *file.location;
    for (std::size_t j = 0; j < loc.points.size(); ++j) {
      const double w = loc.weights[j];
      const Point2 r{loc.points[j][0], loc.points[j][1]};
      const Point2 up{r[0] + w, r[1] + w};
      const Point2 down{r[0] - w, r[1] - w};
      svg.line("weight-diagonal", down, up);
      svg.circle("weighted-corner", down, radius);
      svg.circle("weighted-corner", up, radius);
      svg.circle("demand", r, radius);
    }
  }

  if (sol) {
    const Point2 lo = point_of(sol->x_lo);
    const Point2 hi = point_of(sol->x_hi);
    const auto outline = solution_set_outline(*sol);
    if (!collinear(outline)) svg.polygon("solution-set", outline);
    if (finite_point(lo) && finite_point(hi)) {
      if (lo == hi) {
        svg.circle("solution-point", lo, radius);
      } else {
        svg.line("solution", lo, hi);
      }
      svg.label("x'", lo);
      if (lo != hi) svg.label("x''", hi);
    }
  }

  if (finite_point(p)) svg.label("p", p);
  if (finite_point(q)) svg.label("q", q);
  if (g) svg.label("g", *g);
  if (h) svg.label("h", *h);

  std::string title = std::string(to_string(file.type)) + " problem";
  if (!sol) title += " (infeasible)";
  return svg.finish(view, title);
}

}  // namespace tropopt
