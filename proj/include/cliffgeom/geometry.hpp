#pragma once

// Finite incidence structures. The generated PG(m-1,2) identifies points with
// the nonzero vectors of Z₂^m and lines with the XOR-closed triples
// {a, b, a^b}. Parsed external structures use the same container with opaque
// point labels and arbitrary line sizes.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cliffgeom/errors.hpp"
#include "cliffgeom/gf2.hpp"

namespace cliffgeom {

inline constexpr int kDefaultPointGuard = 16;  // 2^16 - 1 points
inline constexpr int kDefaultLineGuard = 12;   // full line enumeration

/// Either a blade mask (subset of generators) or an opaque text label.
using PointLabel = std::variant<std::uint64_t, std::string>;

inline bool is_mask_label(const PointLabel& l) { return std::holds_alternative<std::uint64_t>(l); }
inline std::uint64_t mask_of(const PointLabel& l) { return std::get<std::uint64_t>(l); }

inline std::string label_text(const PointLabel& l) {
  if (is_mask_label(l)) {
    std::string out = "{";
    bool first = true;
    for (std::uint64_t b = mask_of(l); b != 0; b &= b - 1) {
      if (!first) out += ',';
      out += std::to_string(std::countr_zero(b) + 1);
      first = false;
    }
    return out + "}";
  }
  return std::get<std::string>(l);
}

struct Geometry {
  std::string name;
  std::optional<int> m;                      // ambient generator count when known
  std::vector<PointLabel> points;
  std::vector<std::uint32_t> line_data;      // concatenated member indices, each line ascending
  std::vector<std::uint32_t> line_offsets{0};  // size line_count()+1; lines sorted lexicographically

  std::size_t point_count() const { return points.size(); }
  std::size_t line_count() const { return line_offsets.size() - 1; }

  std::span<const std::uint32_t> line(std::size_t i) const {
    return {line_data.data() + line_offsets[i], line_data.data() + line_offsets[i + 1]};
  }

  void add_line(std::vector<std::uint32_t> members) {
    std::sort(members.begin(), members.end());
    line_data.insert(line_data.end(), members.begin(), members.end());
    line_offsets.push_back(static_cast<std::uint32_t>(line_data.size()));
  }

  bool line_contains(std::size_t i, std::uint32_t p) const {
    const auto l = line(i);
    return std::binary_search(l.begin(), l.end(), p);
  }
};

inline std::uint64_t pg_point_count(int m) { return (std::uint64_t{1} << m) - 1; }

/// (2^m - 1)(2^{m-1} - 1)/3; exact, the numerator is always divisible by 3.
inline std::uint64_t pg_line_count(int m) {
  if (m < 2) return 0;
  return pg_point_count(m) * ((std::uint64_t{1} << (m - 1)) - 1) / 3;
}

/// The projective space of Z₂^m. Point i carries mask i+1; lines are emitted
/// in lexicographic order of their sorted triples, each exactly once.
inline Geometry build_pg(int m, bool with_lines = true, int point_guard = kDefaultPointGuard,
                         int line_guard = kDefaultLineGuard) {
  if (m < 1) throw DimensionMismatch("build_pg requires m >= 1");
  if (m > point_guard)
    throw GuardExceeded("build_pg m=" + std::to_string(m) + " exceeds point guard " +
                        std::to_string(point_guard));
  if (with_lines && m > line_guard)
    throw GuardExceeded("build_pg line enumeration for m=" + std::to_string(m) +
                        " exceeds line guard " + std::to_string(line_guard));

  Geometry g;
  g.name = "PG(" + std::to_string(m - 1) + ",2)";
  g.m = m;
  const std::uint64_t n = pg_point_count(m);
  g.points.reserve(n);
  for (std::uint64_t v = 1; v <= n; ++v) g.points.emplace_back(v);

  if (with_lines && m >= 2) {
    g.line_data.reserve(3 * pg_line_count(m));
    g.line_offsets.reserve(pg_line_count(m) + 1);
    for (std::uint64_t a = 1; a <= n; ++a) {
      for (std::uint64_t b = a + 1; b <= n; ++b) {
        const std::uint64_t c = a ^ b;
        if (c > b) {
          const std::uint32_t tri[3] = {static_cast<std::uint32_t>(a - 1),
                                        static_cast<std::uint32_t>(b - 1),
                                        static_cast<std::uint32_t>(c - 1)};
          g.line_data.insert(g.line_data.end(), tri, tri + 3);
          g.line_offsets.push_back(static_cast<std::uint32_t>(g.line_data.size()));
        }
      }
    }
  }
  return g;
}

struct PgCounts {
  std::uint64_t points = 0;
  std::uint64_t lines = 0;
  std::optional<std::uint64_t> lines_per_point;  // set when uniform
  bool enumerated = false;                       // false: formula only
};

/// Counts by direct enumeration (with per-point degree verification) for
/// m <= line_guard, by the closed formulas beyond.
inline PgCounts pg_counts(int m, int point_guard = kDefaultPointGuard,
                          int line_guard = kDefaultLineGuard) {
  if (m < 1) throw DimensionMismatch("pg_counts requires m >= 1");
  if (m > point_guard)
    throw GuardExceeded("pg m=" + std::to_string(m) + " exceeds point guard " +
                        std::to_string(point_guard));
  PgCounts counts;
  counts.points = pg_point_count(m);
  if (m > line_guard) {
    counts.lines = pg_line_count(m);
    counts.lines_per_point = m >= 2 ? (std::uint64_t{1} << (m - 1)) - 1 : 0;
    return counts;
  }
  const std::uint64_t n = counts.points;
  std::vector<std::uint32_t> degree(n + 1, 0);
  std::uint64_t lines = 0;
  for (std::uint64_t a = 1; a <= n; ++a) {
    for (std::uint64_t b = a + 1; b <= n; ++b) {
      const std::uint64_t c = a ^ b;
      if (c > b) {
        ++lines;
        ++degree[a];
        ++degree[b];
        ++degree[c];
      }
    }
  }
  counts.lines = lines;
  counts.enumerated = true;
  if (n > 0) {
    const std::uint32_t d0 = degree[1];
    bool uniform = true;
    for (std::uint64_t v = 1; v <= n; ++v) uniform &= (degree[v] == d0);
    if (uniform) counts.lines_per_point = d0;
  }
  return counts;
}

/// A line of PG(m-1,2) as its three points in ascending mask order.
struct Line {
  std::array<GF2Vector, 3> pts;

  friend bool operator==(const Line&, const Line&) = default;
};

inline Line line_through(const GF2Vector& a, const GF2Vector& b) {
  if (a.m != b.m)
    throw DimensionMismatch("line_through over mismatched dimensions");
  if (a.is_zero() || b.is_zero())
    throw DegenerateConfiguration("line through the zero vector");
  if (a == b) throw DegenerateConfiguration("line through a single point");
  std::array<GF2Vector, 3> pts{a, b, a ^ b};
  std::sort(pts.begin(), pts.end(),
            [](const GF2Vector& x, const GF2Vector& y) { return x.bits < y.bits; });
  return Line{pts};
}

/// Pair/point -> line lookup tables for a fixed Geometry.
class IncidenceIndex {
 public:
  explicit IncidenceIndex(const Geometry& g) : point_lines_(g.point_count()) {
    for (std::size_t li = 0; li < g.line_count(); ++li) {
      const auto line = g.line(li);
      for (std::size_t i = 0; i < line.size(); ++i) {
        point_lines_.at(line[i]).push_back(static_cast<std::uint32_t>(li));
        for (std::size_t j = i + 1; j < line.size(); ++j)
          pair_lines_[key(line[i], line[j])].push_back(static_cast<std::uint32_t>(li));
      }
    }
  }

  const std::vector<std::uint32_t>& lines_through(std::uint32_t a, std::uint32_t b) const {
    const auto it = pair_lines_.find(key(a, b));
    return it == pair_lines_.end() ? empty_ : it->second;
  }

  const std::vector<std::uint32_t>& lines_of(std::uint32_t p) const { return point_lines_[p]; }

 private:
  static std::uint64_t key(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
  }

  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> pair_lines_;
  std::vector<std::vector<std::uint32_t>> point_lines_;
  std::vector<std::uint32_t> empty_;
};

/// True iff every line through two members lies entirely inside the set.
/// A pair with no line through it cannot satisfy that and counts as a
/// violation.
inline bool is_projective_subspace(const std::vector<std::uint32_t>& pts, const Geometry& g,
                                   const IncidenceIndex& idx) {
  std::vector<char> member(g.point_count(), 0);
  for (auto p : pts) member.at(p) = 1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto& lines = idx.lines_through(pts[i], pts[j]);
      if (lines.empty()) return false;
      for (auto li : lines)
        for (auto p : g.line(li))
          if (!member[p]) return false;
    }
  }
  return true;
}

inline bool is_projective_subspace(const std::vector<std::uint32_t>& pts, const Geometry& g) {
  return is_projective_subspace(pts, g, IncidenceIndex(g));
}

}  // namespace cliffgeom
