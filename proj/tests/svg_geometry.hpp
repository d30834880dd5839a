#pragma once

// Pulls the geometric elements back out of a rendered SVG document.

#include <array>
#include <cmath>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace svg_geometry {

using Point = std::array<double, 2>;

struct Element {
  std::string tag;
  std::string cls;
  std::map<std::string, std::string> attrs;

  double num(const std::string& key) const { return std::stod(attrs.at(key)); }
};

inline std::vector<Element> elements(const std::string& svg) {
  static const std::regex element(R"(<(line|rect|circle|polygon) ([^>]*?)/>)");
  static const std::regex attribute(R"(([a-z0-9-]+)="([^"]*)\")");
  std::vector<Element> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), element); it != std::sregex_iterator(); ++it) {
    Element e;
    e.tag = (*it)[1];
    const std::string body = (*it)[2];
    for (auto a = std::sregex_iterator(body.begin(), body.end(), attribute); a != std::sregex_iterator(); ++a)
      e.attrs[(*a)[1]] = (*a)[2];
    e.cls = e.attrs.count("class") ? e.attrs["class"] : "";
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<Element> of_class(const std::vector<Element>& all, const std::string& cls) {
  std::vector<Element> out;
  for (const auto& e : all)
    if (e.cls == cls) out.push_back(e);
  return out;
}

inline std::array<Point, 2> segment(const Element& line) {
  return {{{line.num("x1"), line.num("y1")}, {line.num("x2"), line.num("y2")}}};
}

/// Lower-left and upper-right corners.
inline std::array<Point, 2> corners(const Element& rect) {
  const double x = rect.num("x"), y = rect.num("y");
  return {{{x, y}, {x + rect.num("width"), y + rect.num("height")}}};
}

inline Point center(const Element& circle) { return {circle.num("cx"), circle.num("cy")}; }

inline std::vector<Point> vertices(const Element& polygon) {
  std::vector<Point> out;
  std::istringstream in(polygon.attrs.at("points"));
  std::string pair;
  while (in >> pair) {
    const auto comma = pair.find(',');
    out.push_back({std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))});
  }
  return out;
}

/// Reference drawing coordinates (origin at (25, 20), two picture units per
/// data unit) in data coordinates.
inline Point from_picture(double x, double y) { return {(x - 25) / 2, (y - 20) / 2}; }

/// Whether p lies on the line through a and b.
inline bool on_line(const Point& p, const Point& a, const Point& b, double tol = 1e-9) {
  const double cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
  return std::abs(cross) <= tol * (1 + std::abs(b[0] - a[0]) + std::abs(b[1] - a[1]));
}

}  // namespace svg_geometry
