#pragma once

// The blade geometry (P_m, L_m) — points are the e_S with S nonempty, three
// points collinear when the product of two equals ± the third — is the same
// structure as the projective space of Z₂^m. The check builds both line sets
// independently (blade products on one side, XOR triples via build_pg on the
// other) and verifies the sign-forgetting map is a line-preserving bijection
// in both directions.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cliffgeom/blade.hpp"
#include "cliffgeom/geometry.hpp"

namespace cliffgeom {

struct IsoReport {
  bool ok = false;
  std::uint64_t blade_points = 0;
  std::uint64_t vector_points = 0;
  std::uint64_t blade_lines = 0;
  std::uint64_t vector_lines = 0;
  std::string detail;  // set when !ok
};

inline IsoReport blade_geometry_isomorphism(int m, int point_guard = kDefaultPointGuard,
                                            int line_guard = kDefaultLineGuard) {
  if (m < 1) throw DimensionMismatch("blade_geometry_isomorphism requires m >= 1");
  if (m > line_guard)
    throw GuardExceeded("isomorphism check for m=" + std::to_string(m) + " exceeds guard " +
                        std::to_string(line_guard));

  IsoReport report;
  const std::uint64_t n = pg_point_count(m);
  report.blade_points = n;  // nonempty subsets of {1..m}

  // Lines from blade multiplication: {S,T, index(e_S e_T)} over all pairs.
  std::vector<std::array<std::uint64_t, 3>> blade_lines;
  for (std::uint64_t s = 1; s <= n; ++s) {
    for (std::uint64_t t = s + 1; t <= n; ++t) {
      const SignedBlade prod =
          blade_mul(SignedBlade{+1, BladeIndex{s, m}}, SignedBlade{+1, BladeIndex{t, m}});
      std::array<std::uint64_t, 3> tri{s, t, prod.index.bits};
      std::sort(tri.begin(), tri.end());
      blade_lines.push_back(tri);
    }
  }
  std::sort(blade_lines.begin(), blade_lines.end());
  blade_lines.erase(std::unique(blade_lines.begin(), blade_lines.end()), blade_lines.end());
  report.blade_lines = blade_lines.size();

  const Geometry pg = build_pg(m, /*with_lines=*/true, point_guard, line_guard);
  report.vector_points = pg.point_count();
  report.vector_lines = pg.line_count();

  if (report.blade_points != report.vector_points) {
    report.detail = "point counts differ";
    return report;
  }
  if (report.blade_lines != report.vector_lines) {
    report.detail = "line counts differ";
    return report;
  }

  // Forward: every blade line is an XOR-closed vector line. Backward: every
  // vector line, read as blades, has each pairwise product equal to ± the
  // remaining blade.
  for (const auto& tri : blade_lines) {
    if ((tri[0] ^ tri[1]) != tri[2]) {
      report.detail = "blade line is not XOR-closed: {" + std::to_string(tri[0]) + "," +
                      std::to_string(tri[1]) + "," + std::to_string(tri[2]) + "}";
      return report;
    }
  }
  for (std::size_t li = 0; li < pg.line_count(); ++li) {
    const auto line = pg.line(li);
    const std::uint64_t masks[3] = {mask_of(pg.points[line[0]]), mask_of(pg.points[line[1]]),
                                    mask_of(pg.points[line[2]])};
    static constexpr int kPairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    for (const auto& p : kPairs) {
      const SignedBlade prod = blade_mul(SignedBlade{+1, BladeIndex{masks[p[0]], m}},
                                         SignedBlade{+1, BladeIndex{masks[p[1]], m}});
      if (prod.index.bits != masks[p[2]]) {
        report.detail = "vector line not realized by blade products";
        return report;
      }
    }
  }

  report.ok = true;
  return report;
}

}  // namespace cliffgeom
