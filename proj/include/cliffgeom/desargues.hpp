#pragma once

// Desargues property: triangles ABC and A'B'C' perspective from a center D
// (D collinear with every corresponding vertex pair) are perspective from an
// axis: the side intersections F = AB∩A'B', G = BC∩B'C', H = AC∩A'C' are
// collinear. desargues_check verifies one configuration; the exhaustive
// search enumerates every centrally-perspective nondegenerate pair, skipping
// and counting degenerate ones (coincident corresponding sides, a center on
// a vertex, collinear triangles), which the statement presumes away.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffgeom/geometry.hpp"
#include "cliffgeom/parallel.hpp"

namespace cliffgeom {

inline constexpr int kDefaultDesarguesPointGuard = 63;

struct DesarguesCheckResult {
  bool ok = false;
  std::array<std::uint32_t, 3> meets{};  // F, G, H point indices
  std::optional<std::uint32_t> axis_line;
  std::string failure;  // set iff !ok
};

namespace detail {

struct DesarguesSides {
  std::optional<std::string> degenerate;
  std::array<std::uint32_t, 3> sides{};        // AB, BC, AC
  std::array<std::uint32_t, 3> sides_prime{};  // A'B', B'C', A'C'
};

inline std::optional<std::uint32_t> unique_line(const IncidenceIndex& idx, std::uint32_t a,
                                                std::uint32_t b) {
  const auto& ls = idx.lines_through(a, b);
  if (ls.size() != 1) return std::nullopt;
  return ls.front();
}

inline DesarguesSides classify_desargues(const Geometry& g, const IncidenceIndex& idx,
                                         std::uint32_t center,
                                         const std::array<std::uint32_t, 3>& tri,
                                         const std::array<std::uint32_t, 3>& tri_prime) {
  DesarguesSides out;
  auto fail = [&](std::string why) {
    out.degenerate = std::move(why);
    return out;
  };

  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (tri[i] == tri[j]) return fail("triangle vertices not distinct");
      if (tri_prime[i] == tri_prime[j]) return fail("primed triangle vertices not distinct");
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (tri[i] == tri_prime[i]) return fail("corresponding vertices equal");
    if (center == tri[i] || center == tri_prime[i]) return fail("center equals a vertex");
  }

  static constexpr int kSide[3][2] = {{0, 1}, {1, 2}, {0, 2}};
  for (int s = 0; s < 3; ++s) {
    const auto l = unique_line(idx, tri[kSide[s][0]], tri[kSide[s][1]]);
    if (!l) return fail("triangle side is not a unique line");
    out.sides[s] = *l;
    const auto lp = unique_line(idx, tri_prime[kSide[s][0]], tri_prime[kSide[s][1]]);
    if (!lp) return fail("primed triangle side is not a unique line");
    out.sides_prime[s] = *lp;
  }
  if (g.line_contains(out.sides[0], tri[2])) return fail("triangle collinear");
  if (g.line_contains(out.sides_prime[0], tri_prime[2])) return fail("primed triangle collinear");

  for (int i = 0; i < 3; ++i) {
    bool perspective = false;
    for (auto l : idx.lines_through(tri[i], tri_prime[i]))
      perspective |= g.line_contains(l, center);
    if (!perspective) return fail("center not collinear with a corresponding vertex pair");
  }
  for (int s = 0; s < 3; ++s)
    if (out.sides[s] == out.sides_prime[s]) return fail("corresponding sides coincide");
  return out;
}

inline DesarguesCheckResult desargues_core(const Geometry& g, const IncidenceIndex& idx,
                                           const DesarguesSides& sides) {
  DesarguesCheckResult res;
  for (int s = 0; s < 3; ++s) {
    std::uint32_t meet = 0;
    int found = 0;
    for (auto p : g.line(sides.sides[s])) {
      if (g.line_contains(sides.sides_prime[s], p)) {
        meet = p;
        ++found;
      }
    }
    if (found == 0) {
      res.failure = "corresponding sides do not meet";
      return res;
    }
    if (found > 1) {
      res.failure = "corresponding sides share several points";
      return res;
    }
    res.meets[s] = meet;
  }
  if (res.meets[0] == res.meets[1] || res.meets[0] == res.meets[2] ||
      res.meets[1] == res.meets[2]) {
    res.failure = "side intersections coincide";
    return res;
  }
  for (auto l : idx.lines_through(res.meets[0], res.meets[1])) {
    if (g.line_contains(l, res.meets[2])) {
      res.ok = true;
      res.axis_line = l;
      return res;
    }
  }
  res.failure = "side intersections are not collinear";
  return res;
}

}  // namespace detail

/// Check one configuration. Throws DegenerateConfiguration (naming the failed
/// precondition) on degenerate input; otherwise returns the axis or the
/// counterexample reason.
inline DesarguesCheckResult desargues_check(const Geometry& g, const IncidenceIndex& idx,
                                            std::uint32_t center,
                                            const std::array<std::uint32_t, 3>& tri,
                                            const std::array<std::uint32_t, 3>& tri_prime) {
  const auto sides = detail::classify_desargues(g, idx, center, tri, tri_prime);
  if (sides.degenerate) throw DegenerateConfiguration(*sides.degenerate);
  return detail::desargues_core(g, idx, sides);
}

inline DesarguesCheckResult desargues_check(const Geometry& g, std::uint32_t center,
                                            const std::array<std::uint32_t, 3>& tri,
                                            const std::array<std::uint32_t, 3>& tri_prime) {
  return desargues_check(g, IncidenceIndex(g), center, tri, tri_prime);
}

struct DesarguesConfig {
  std::uint32_t center = 0;
  std::array<std::uint32_t, 3> tri{}, tri_prime{}, meets{};
  std::uint32_t axis_line = 0;
};

struct DesarguesCounterexample {
  std::uint32_t center = 0;
  std::array<std::uint32_t, 3> tri{}, tri_prime{};
  std::string reason;
};

struct DesarguesExhaustiveReport {
  bool pass = true;
  std::uint64_t checked = 0;             // nondegenerate unordered triangle pairs
  std::uint64_t degenerate_skipped = 0;  // enumeration events skipped as degenerate
  std::uint64_t failures = 0;
  std::vector<DesarguesConfig> configurations;  // passing configs, capped
  std::vector<DesarguesCounterexample> counterexamples;  // capped
};

struct DesarguesOptions {
  int point_guard = kDefaultDesarguesPointGuard;
  unsigned jobs = 1;
  std::size_t collect_limit = 32;
  std::size_t max_counterexamples = 8;
};

inline DesarguesExhaustiveReport desargues_exhaustive(const Geometry& g,
                                                      const IncidenceIndex& idx,
                                                      const DesarguesOptions& opt = {}) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.point_count());
  if (n > static_cast<std::uint32_t>(opt.point_guard))
    throw GuardExceeded("desargues search over " + std::to_string(n) +
                        " points exceeds guard " + std::to_string(opt.point_guard));

  // Triangles: index triples a<b<c whose three sides are unique lines and
  // which are not collinear.
  std::vector<std::array<std::uint32_t, 3>> triangles;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      const auto lab = detail::unique_line(idx, a, b);
      if (!lab) continue;
      for (std::uint32_t c = b + 1; c < n; ++c) {
        if (g.line_contains(*lab, c)) continue;
        if (!detail::unique_line(idx, b, c) || !detail::unique_line(idx, a, c)) continue;
        triangles.push_back({a, b, c});
      }
    }
  }

  auto candidates_for = [&](std::uint32_t center, std::uint32_t x) {
    std::vector<std::uint32_t> cands;
    for (auto l : idx.lines_through(center, x))
      for (auto p : g.line(l))
        if (p != center && p != x) cands.push_back(p);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
  };

  struct Chunk {
    std::uint64_t checked = 0, degenerate = 0, failures = 0;
    std::vector<DesarguesConfig> configs;
    std::vector<DesarguesCounterexample> counterexamples;
  };

  auto body = [&](std::uint64_t begin, std::uint64_t end, std::uint64_t) {
    Chunk ch;
    for (std::uint64_t ti = begin; ti < end; ++ti) {
      const auto& tri = triangles[ti];
      for (std::uint32_t center = 0; center < n; ++center) {
        if (center == tri[0] || center == tri[1] || center == tri[2]) continue;
        const auto ca = candidates_for(center, tri[0]);
        if (ca.empty()) continue;
        const auto cb = candidates_for(center, tri[1]);
        if (cb.empty()) continue;
        const auto cc = candidates_for(center, tri[2]);
        if (cc.empty()) continue;
        for (auto ap : ca) {
          for (auto bp : cb) {
            for (auto cp : cc) {
              const std::array<std::uint32_t, 3> prime{ap, bp, cp};
              const auto sides = detail::classify_desargues(g, idx, center, tri, prime);
              if (sides.degenerate) {
                ++ch.degenerate;
                continue;
              }
              // Each unordered pair appears once from each triangle; keep the
              // lexicographically smaller base.
              std::array<std::uint32_t, 3> prime_sorted = prime;
              std::sort(prime_sorted.begin(), prime_sorted.end());
              if (prime_sorted < tri) continue;
              ++ch.checked;
              const auto res = detail::desargues_core(g, idx, sides);
              if (res.ok) {
                if (ch.configs.size() < opt.collect_limit)
                  ch.configs.push_back(
                      DesarguesConfig{center, tri, prime, res.meets, *res.axis_line});
              } else {
                ++ch.failures;
                if (ch.counterexamples.size() < opt.max_counterexamples)
                  ch.counterexamples.push_back(
                      DesarguesCounterexample{center, tri, prime, res.failure});
              }
            }
          }
        }
      }
    }
    return ch;
  };

  Chunk total = chunked_reduce<Chunk>(
      triangles.size(), 1024, opt.jobs, body, [&](Chunk& acc, Chunk&& part) {
        acc.checked += part.checked;
        acc.degenerate += part.degenerate;
        acc.failures += part.failures;
        for (auto& c : part.configs)
          if (acc.configs.size() < opt.collect_limit) acc.configs.push_back(std::move(c));
        for (auto& c : part.counterexamples)
          if (acc.counterexamples.size() < opt.max_counterexamples)
            acc.counterexamples.push_back(std::move(c));
      });

  DesarguesExhaustiveReport report;
  report.checked = total.checked;
  report.degenerate_skipped = total.degenerate;
  report.failures = total.failures;
  report.configurations = std::move(total.configs);
  report.counterexamples = std::move(total.counterexamples);
  report.pass = report.failures == 0;
  return report;
}

inline DesarguesExhaustiveReport desargues_exhaustive(const Geometry& g,
                                                      const DesarguesOptions& opt = {}) {
  return desargues_exhaustive(g, IncidenceIndex(g), opt);
}

}  // namespace cliffgeom
