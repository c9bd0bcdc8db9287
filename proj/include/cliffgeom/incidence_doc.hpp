#pragma once

// JSON incidence documents:
//   {"name": str, "m": int?, "points": [[int…]|str …], "lines": [[int…]…],
//    "metadata": {str: str}?}
// Points given as integer lists are blade subsets (generators, 1-based);
// string points carry external geometries where only incidence is known.
// Parsing validates and canonicalizes: subset points sorted by mask, then
// string points lexicographically; lines remapped, each sorted ascending,
// the list sorted lexicographically; duplicates are errors, not warnings.
// serialize_incidence emits a byte-stable canonical form.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliffgeom/errors.hpp"
#include "cliffgeom/geometry.hpp"

namespace cliffgeom {

struct IncidenceDocument {
  std::string name;
  std::optional<int> m;
  std::vector<PointLabel> points;
  std::vector<std::vector<std::uint32_t>> lines;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const IncidenceDocument&, const IncidenceDocument&) = default;
};

namespace detail {

inline std::pair<int, int> line_column_of(std::string_view text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline bool label_less(const PointLabel& a, const PointLabel& b) {
  if (is_mask_label(a) != is_mask_label(b)) return is_mask_label(a);
  if (is_mask_label(a)) return mask_of(a) < mask_of(b);
  return std::get<std::string>(a) < std::get<std::string>(b);
}

}  // namespace detail

inline IncidenceDocument parse_incidence(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = detail::line_column_of(text, e.byte);
    throw ParseError(std::string("malformed JSON: ") + e.what(), line, column);
  }

  if (!j.is_object()) throw ValidationError("document root must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "name" && key != "m" && key != "points" && key != "lines" && key != "metadata")
      throw ValidationError("unknown field '" + key + "'");
  }

  IncidenceDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ValidationError("field 'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("m")) {
    if (!j["m"].is_number_integer()) throw ValidationError("field 'm' must be an integer");
    const auto mv = j["m"].get<std::int64_t>();
    if (mv < 1 || mv > kMaxGenerators)
      throw ValidationError("field 'm' must be in 1.." + std::to_string(kMaxGenerators));
    doc.m = static_cast<int>(mv);
  }

  if (!j.contains("points") || !j["points"].is_array())
    throw ValidationError("field 'points' must be an array");
  int max_generator = 0;
  for (std::size_t pi = 0; pi < j["points"].size(); ++pi) {
    const auto& p = j["points"][pi];
    if (p.is_string()) {
      doc.points.emplace_back(p.get<std::string>());
      continue;
    }
    if (!p.is_array())
      throw ValidationError("point " + std::to_string(pi) +
                            " must be a subset (array of integers) or a string");
    if (p.empty())
      throw ValidationError("point " + std::to_string(pi) +
                            " is an empty subset; projective points are nonzero");
    std::uint64_t mask = 0;
    for (const auto& g : p) {
      if (!g.is_number_integer())
        throw ValidationError("point " + std::to_string(pi) + " has a non-integer generator");
      const auto gv = g.get<std::int64_t>();
      if (gv < 1 || gv > kMaxGenerators)
        throw ValidationError("point " + std::to_string(pi) + " generator " +
                              std::to_string(gv) + " outside 1.." +
                              std::to_string(kMaxGenerators));
      const std::uint64_t bit = std::uint64_t{1} << (gv - 1);
      if (mask & bit)
        throw ValidationError("point " + std::to_string(pi) + " repeats generator " +
                              std::to_string(gv));
      mask |= bit;
      max_generator = std::max(max_generator, static_cast<int>(gv));
    }
    doc.points.emplace_back(mask);
  }
  if (doc.m && max_generator > *doc.m)
    throw ValidationError("a point uses generator " + std::to_string(max_generator) +
                          " beyond m=" + std::to_string(*doc.m));
  if (!doc.m && max_generator > 0) doc.m = max_generator;

  for (std::size_t a = 0; a < doc.points.size(); ++a)
    for (std::size_t b = a + 1; b < doc.points.size(); ++b)
      if (doc.points[a] == doc.points[b])
        throw ValidationError("duplicate point label at indices " + std::to_string(a) + " and " +
                              std::to_string(b) + " (" + label_text(doc.points[a]) + ")");

  if (!j.contains("lines") || !j["lines"].is_array())
    throw ValidationError("field 'lines' must be an array");
  for (std::size_t li = 0; li < j["lines"].size(); ++li) {
    const auto& l = j["lines"][li];
    if (!l.is_array() || l.empty())
      throw ValidationError("line " + std::to_string(li) +
                            " must be a nonempty array of point indices");
    std::vector<std::uint32_t> members;
    for (const auto& idx : l) {
      if (!idx.is_number_integer())
        throw ValidationError("line " + std::to_string(li) + " has a non-integer point index");
      const auto iv = idx.get<std::int64_t>();
      if (iv < 0 || iv >= static_cast<std::int64_t>(doc.points.size()))
        throw ValidationError("line " + std::to_string(li) + " references point index " +
                              std::to_string(iv) + " of " + std::to_string(doc.points.size()));
      members.push_back(static_cast<std::uint32_t>(iv));
    }
    std::vector<std::uint32_t> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("line " + std::to_string(li) + " repeats a point index");
    doc.lines.push_back(std::move(members));
  }

  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw ValidationError("field 'metadata' must be an object");
    for (const auto& [key, value] : j["metadata"].items()) {
      if (!value.is_string())
        throw ValidationError("metadata value for '" + key + "' must be a string");
      doc.metadata[key] = value.get<std::string>();
    }
  }

  // Canonicalize: reorder points, remap and sort lines.
  std::vector<std::size_t> perm(doc.points.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return detail::label_less(doc.points[a], doc.points[b]);
  });
  std::vector<std::uint32_t> new_index(doc.points.size());
  std::vector<PointLabel> sorted_points;
  sorted_points.reserve(doc.points.size());
  for (std::size_t rank = 0; rank < perm.size(); ++rank) {
    new_index[perm[rank]] = static_cast<std::uint32_t>(rank);
    sorted_points.push_back(doc.points[perm[rank]]);
  }
  doc.points = std::move(sorted_points);
  for (auto& line : doc.lines) {
    for (auto& p : line) p = new_index[p];
    std::sort(line.begin(), line.end());
  }
  std::sort(doc.lines.begin(), doc.lines.end());
  for (std::size_t li = 0; li + 1 < doc.lines.size(); ++li) {
    if (doc.lines[li] == doc.lines[li + 1]) {
      std::string offender;
      for (auto p : doc.lines[li]) offender += (offender.empty() ? "" : ",") + std::to_string(p);
      throw ValidationError("duplicate line {" + offender + "}");
    }
  }
  return doc;
}

/// Canonical serialization: schema-ordered keys, two-space indentation, one
/// point/line per row, metadata sorted by key, trailing newline. Identical
/// documents produce identical bytes.
inline std::string serialize_incidence(const IncidenceDocument& doc) {
  std::string out = "{\n";
  out += "  \"name\": " + nlohmann::json(doc.name).dump() + ",\n";
  if (doc.m) out += "  \"m\": " + std::to_string(*doc.m) + ",\n";

  auto render_subset = [](std::uint64_t mask) {
    std::string s = "[";
    bool first = true;
    for (std::uint64_t b = mask; b != 0; b &= b - 1) {
      if (!first) s += ", ";
      s += std::to_string(std::countr_zero(b) + 1);
      first = false;
    }
    return s + "]";
  };

  out += "  \"points\": ";
  if (doc.points.empty()) {
    out += "[],\n";
  } else {
    out += "[\n";
    for (std::size_t i = 0; i < doc.points.size(); ++i) {
      out += "    ";
      out += is_mask_label(doc.points[i]) ? render_subset(mask_of(doc.points[i]))
                                          : nlohmann::json(std::get<std::string>(doc.points[i])).dump();
      out += (i + 1 < doc.points.size()) ? ",\n" : "\n";
    }
    out += "  ],\n";
  }

  out += "  \"lines\": ";
  if (doc.lines.empty()) {
    out += "[]";
  } else {
    out += "[\n";
    for (std::size_t i = 0; i < doc.lines.size(); ++i) {
      out += "    [";
      for (std::size_t k = 0; k < doc.lines[i].size(); ++k) {
        if (k) out += ", ";
        out += std::to_string(doc.lines[i][k]);
      }
      out += "]";
      out += (i + 1 < doc.lines.size()) ? ",\n" : "\n";
    }
    out += "  ]";
  }

  if (!doc.metadata.empty()) {
    out += ",\n  \"metadata\": {\n";
    std::size_t i = 0;
    for (const auto& [key, value] : doc.metadata) {
      out += "    " + nlohmann::json(key).dump() + ": " + nlohmann::json(value).dump();
      out += (++i < doc.metadata.size()) ? ",\n" : "\n";
    }
    out += "  }";
  }
  out += "\n}\n";
  return out;
}

inline Geometry geometry_from_document(const IncidenceDocument& doc) {
  Geometry g;
  g.name = doc.name;
  g.m = doc.m;
  g.points = doc.points;
  for (const auto& line : doc.lines) g.add_line(line);
  return g;
}

inline IncidenceDocument document_from_geometry(const Geometry& g) {
  IncidenceDocument doc;
  doc.name = g.name;
  doc.m = g.m;
  doc.points = g.points;
  doc.lines.reserve(g.line_count());
  for (std::size_t li = 0; li < g.line_count(); ++li) {
    const auto line = g.line(li);
    doc.lines.emplace_back(line.begin(), line.end());
  }
  std::sort(doc.lines.begin(), doc.lines.end());
  return doc;
}

/// True when every point is a blade subset, which enables labeling, lie
/// closure and Desargues-axis labeling on the document.
inline bool all_points_are_subsets(const IncidenceDocument& doc) {
  for (const auto& p : doc.points)
    if (!is_mask_label(p)) return false;
  return true;
}

}  // namespace cliffgeom
