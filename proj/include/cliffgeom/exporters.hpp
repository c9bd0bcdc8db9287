#pragma once

// Text exporters. DOT output is the point/line bipartite incidence graph
// with stable node ordering (point nodes p<i>, line nodes l<j>, undirected
// edges in line-major order). TikZ output is a best-effort picture: the
// classic triangle-plus-incircle layout for the m=3 plane, a small
// deterministic spring layout otherwise; only incidence content is
// contractual, never coordinates.

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cliffgeom/geometry.hpp"
#include "cliffgeom/pauli.hpp"

namespace cliffgeom {

inline std::string export_dot(const Geometry& g) {
  std::string out = "graph incidence {\n";
  if (!g.name.empty()) out += "  label=" + nlohmann::json(g.name).dump() + ";\n";
  out += "  node [shape=circle];\n";
  for (std::size_t i = 0; i < g.point_count(); ++i)
    out += "  p" + std::to_string(i) + " [label=" + nlohmann::json(label_text(g.points[i])).dump() +
           "];\n";
  out += "  node [shape=box];\n";
  for (std::size_t j = 0; j < g.line_count(); ++j)
    out += "  l" + std::to_string(j) + " [label=\"l" + std::to_string(j) + "\"];\n";
  for (std::size_t j = 0; j < g.line_count(); ++j)
    for (auto p : g.line(j))
      out += "  p" + std::to_string(p) + " -- l" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

namespace detail {

inline std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v + 0.0);  // normalize -0
  return buf;
}

struct Position {
  double x = 0, y = 0;
};

inline std::vector<Position> spring_layout(const Geometry& g) {
  const std::size_t n = g.point_count();
  std::vector<Position> pos(n);
  const double pi = 3.14159265358979323846;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2.0 * pi * static_cast<double>(i) / static_cast<double>(n ? n : 1);
    pos[i] = {4.0 * std::cos(a), 4.0 * std::sin(a)};
  }
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<Position> force(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const double dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
        const double d2 = dx * dx + dy * dy + 1e-6;
        force[i].x += 2.0 * dx / d2;
        force[i].y += 2.0 * dy / d2;
      }
    }
    for (std::size_t li = 0; li < g.line_count(); ++li) {
      const auto line = g.line(li);
      for (std::size_t a = 0; a < line.size(); ++a) {
        for (std::size_t b = a + 1; b < line.size(); ++b) {
          const double dx = pos[line[b]].x - pos[line[a]].x;
          const double dy = pos[line[b]].y - pos[line[a]].y;
          force[line[a]].x += 0.05 * dx;
          force[line[a]].y += 0.05 * dy;
          force[line[b]].x -= 0.05 * dx;
          force[line[b]].y -= 0.05 * dy;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      pos[i].x += 0.2 * force[i].x;
      pos[i].y += 0.2 * force[i].y;
    }
  }
  return pos;
}

inline std::string tikz_point_label(const Geometry& g, std::size_t i) {
  const auto& p = g.points[i];
  if (!is_mask_label(p)) return std::get<std::string>(p);
  const std::uint64_t mask = mask_of(p);
  if (g.m && *g.m % 3 == 0 && *g.m > 3)
    return "$" + label_blade_as_pauli(BladeIndex{mask, *g.m}, *g.m / 3).latex() + "$";
  std::string out = "$";
  for (std::uint64_t b = mask; b != 0; b &= b - 1)
    out += "e_{" + std::to_string(std::countr_zero(b) + 1) + "}";
  return out + "$";
}

}  // namespace detail

inline std::string export_tikz(const Geometry& g) {
  const bool fano_shape = g.m && *g.m == 3 && g.point_count() == 7;
  std::vector<detail::Position> pos;
  int circle_line = -1;  // Fano incircle through the three edge midpoints
  if (fano_shape) {
    pos = {{-2.0, 0.0}, {2.0, 0.0},   {0.0, 0.0},  {0.0, 3.464},
           {-1.0, 1.732}, {1.0, 1.732}, {0.0, 1.155}};  // masks 1..7 in order
    for (std::size_t li = 0; li < g.line_count(); ++li) {
      const auto line = g.line(li);
      if (line.size() == 3 && mask_of(g.points[line[0]]) == 3 &&
          mask_of(g.points[line[1]]) == 5 && mask_of(g.points[line[2]]) == 6)
        circle_line = static_cast<int>(li);
    }
  } else {
    pos = detail::spring_layout(g);
  }

  std::string out = "\\begin{tikzpicture}[scale=1.0]\n";
  for (std::size_t li = 0; li < g.line_count(); ++li) {
    if (static_cast<int>(li) == circle_line) {
      out += "  \\draw (0.000,1.155) circle (1.155);\n";
      continue;
    }
    const auto line = g.line(li);
    out += "  \\draw";
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (k) out += " --";
      out += " (" + detail::fixed3(pos[line[k]].x) + "," + detail::fixed3(pos[line[k]].y) + ")";
    }
    out += ";\n";
  }
  for (std::size_t i = 0; i < g.point_count(); ++i) {
    out += "  \\node[draw, circle, fill=white, inner sep=1pt] (p" + std::to_string(i) + ") at (" +
           detail::fixed3(pos[i].x) + "," + detail::fixed3(pos[i].y) + ") {" +
           detail::tikz_point_label(g, i) + "};\n";
  }
  out += "\\end{tikzpicture}\n";
  return out;
}

}  // namespace cliffgeom
