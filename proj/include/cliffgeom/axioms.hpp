#pragma once

// The three projective axioms, checked over an arbitrary incidence structure:
//   (i)   every pair of distinct points lies on exactly one line,
//   (ii)  if lines AB and CD meet, then lines AC and BD meet,
//   (iii) every line carries at least three points.
// Axiom (ii) is quantified over ordered point quadruples, exactly as stated;
// quadruples with repeated points are vacuous and skipped. Structures too
// large for the exhaustive quadruple sweep are sampled with a seeded RNG.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cliffgeom/geometry.hpp"
#include "cliffgeom/parallel.hpp"

namespace cliffgeom {

struct AxiomWitness {
  std::vector<std::uint32_t> points;
  std::vector<std::uint32_t> lines;
  std::string note;
};

struct AxiomResult {
  bool pass = true;
  std::uint64_t violations = 0;
  std::uint64_t checked = 0;
  std::uint64_t skipped_vacuous = 0;
  bool sampled = false;
  std::vector<AxiomWitness> witnesses;  // capped; `violations` is the full count
};

struct AxiomReport {
  AxiomResult axiom_i;
  AxiomResult axiom_ii;
  AxiomResult axiom_iii;

  bool all_pass() const { return axiom_i.pass && axiom_ii.pass && axiom_iii.pass; }
};

struct AxiomCheckOptions {
  std::uint64_t samples = 1'000'000;  // axiom (ii) sample budget for large structures
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint32_t exhaustive_point_limit = 32;  // exhaustive quadruples while P < this
  std::size_t max_witnesses = 8;
};

namespace detail {

inline bool lines_meet(const Geometry& g, std::uint32_t la, std::uint32_t lb) {
  for (auto p : g.line(la))
    if (g.line_contains(lb, p)) return true;
  return false;
}

inline bool some_lines_meet(const Geometry& g, const std::vector<std::uint32_t>& ls,
                            const std::vector<std::uint32_t>& rs) {
  for (auto la : ls)
    for (auto lb : rs)
      if (lines_meet(g, la, lb)) return true;
  return false;
}

// Axiom (ii) body for one quadruple; true means "no violation".
inline bool quadruple_ok(const Geometry& g, const IncidenceIndex& idx, std::uint32_t a,
                         std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  const auto& ab = idx.lines_through(a, b);
  if (ab.empty()) return true;  // hypothesis unsatisfiable
  const auto& cd = idx.lines_through(c, d);
  if (cd.empty()) return true;
  if (!some_lines_meet(g, ab, cd)) return true;  // hypothesis false
  const auto& ac = idx.lines_through(a, c);
  const auto& bd = idx.lines_through(b, d);
  if (ac.empty() || bd.empty()) return false;
  return some_lines_meet(g, ac, bd);
}

}  // namespace detail

inline AxiomReport check_axioms(const Geometry& g, const IncidenceIndex& idx,
                                const AxiomCheckOptions& opt = {}) {
  AxiomReport report;
  const std::uint32_t n = static_cast<std::uint32_t>(g.point_count());

  // (i) unique line through every pair.
  auto& ax1 = report.axiom_i;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      ++ax1.checked;
      const auto& lines = idx.lines_through(a, b);
      if (lines.size() == 1) continue;
      ++ax1.violations;
      if (ax1.witnesses.size() < opt.max_witnesses)
        ax1.witnesses.push_back(AxiomWitness{
            {a, b}, lines, lines.empty() ? "no line through pair" : "multiple lines through pair"});
    }
  }
  ax1.pass = ax1.violations == 0;

  // (ii) exhaustive over ordered quadruples when small, sampled otherwise.
  auto& ax2 = report.axiom_ii;
  struct Chunk {
    std::uint64_t checked = 0, skipped = 0, violations = 0;
    std::vector<AxiomWitness> witnesses;
  };
  auto merge = [&](Chunk& acc, Chunk&& part) {
    acc.checked += part.checked;
    acc.skipped += part.skipped;
    acc.violations += part.violations;
    for (auto& w : part.witnesses)
      if (acc.witnesses.size() < opt.max_witnesses) acc.witnesses.push_back(std::move(w));
  };
  auto record = [&](Chunk& ch, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                    std::uint32_t d) {
    if (a == b || a == c || a == d || b == c || b == d || c == d) {
      ++ch.skipped;
      return;
    }
    ++ch.checked;
    if (!detail::quadruple_ok(g, idx, a, b, c, d)) {
      ++ch.violations;
      if (ch.witnesses.size() < opt.max_witnesses)
        ch.witnesses.push_back(AxiomWitness{{a, b, c, d}, {}, "AB meets CD but AC misses BD"});
    }
  };

  Chunk total;
  if (n >= 4 && n < opt.exhaustive_point_limit) {
    const std::uint64_t nn = n;
    const std::uint64_t quads = nn * nn * nn * nn;
    total = chunked_reduce<Chunk>(
        quads, 1 << 16, opt.jobs,
        [&](std::uint64_t begin, std::uint64_t end, std::uint64_t) {
          Chunk ch;
          for (std::uint64_t q = begin; q < end; ++q) {
            const auto a = static_cast<std::uint32_t>(q % nn);
            const auto b = static_cast<std::uint32_t>((q / nn) % nn);
            const auto c = static_cast<std::uint32_t>((q / (nn * nn)) % nn);
            const auto d = static_cast<std::uint32_t>(q / (nn * nn * nn));
            record(ch, a, b, c, d);
          }
          return ch;
        },
        merge);
  } else if (n >= 4) {
    ax2.sampled = true;
    total = chunked_reduce<Chunk>(
        opt.samples, 1 << 16, opt.jobs,
        [&](std::uint64_t begin, std::uint64_t end, std::uint64_t chunk) {
          Chunk ch;
          std::mt19937_64 rng(mix_seed(opt.seed, chunk));
          for (std::uint64_t s = begin; s < end; ++s) {
            const auto a = static_cast<std::uint32_t>(rng() % n);
            const auto b = static_cast<std::uint32_t>(rng() % n);
            const auto c = static_cast<std::uint32_t>(rng() % n);
            const auto d = static_cast<std::uint32_t>(rng() % n);
            record(ch, a, b, c, d);
          }
          return ch;
        },
        merge);
  }
  ax2.checked = total.checked;
  ax2.skipped_vacuous = total.skipped;
  ax2.violations = total.violations;
  ax2.witnesses = std::move(total.witnesses);
  ax2.pass = ax2.violations == 0;

  // (iii) at least three points per line.
  auto& ax3 = report.axiom_iii;
  for (std::uint32_t li = 0; li < g.line_count(); ++li) {
    ++ax3.checked;
    if (g.line(li).size() >= 3) continue;
    ++ax3.violations;
    if (ax3.witnesses.size() < opt.max_witnesses)
      ax3.witnesses.push_back(AxiomWitness{{}, {li}, "line with fewer than three points"});
  }
  ax3.pass = ax3.violations == 0;

  return report;
}

inline AxiomReport check_axioms(const Geometry& g, const AxiomCheckOptions& opt = {}) {
  return check_axioms(g, IncidenceIndex(g), opt);
}

}  // namespace cliffgeom
