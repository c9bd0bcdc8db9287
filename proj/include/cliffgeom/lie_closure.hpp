#pragma once

// A set X of blades spans a Lie algebra under the commutator bracket iff for
// every pair {S,T} ⊆ X the bracket [e_S,e_T] is either zero (they commute)
// or a multiple of e_{SΔT} with SΔT ∈ X. Point sets of projective subspaces
// always qualify, since SΔT is the third point of their line.

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cliffgeom/blade.hpp"

namespace cliffgeom {

struct LieClosureReport {
  bool pass = true;
  std::uint64_t pairs_checked = 0;
  std::optional<std::pair<BladeIndex, BladeIndex>> violation;
};

inline LieClosureReport lie_closure_check(const std::vector<BladeIndex>& blades, int m) {
  if (blades.empty()) throw DimensionMismatch("lie_closure_check on an empty set");
  std::unordered_set<std::uint64_t> members;
  std::vector<std::uint64_t> masks;
  for (const auto& s : blades) {
    detail::require_valid(s);
    if (s.m != m) throw DimensionMismatch("blade over wrong generator count in lie_closure_check");
    if (s.bits == 0) throw DimensionMismatch("lie_closure_check excludes the identity blade");
    if (members.insert(s.bits).second) masks.push_back(s.bits);
  }

  LieClosureReport report;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      ++report.pairs_checked;
      const BladeIndex s{masks[i], m}, t{masks[j], m};
      if (commutes(s, t)) continue;
      if (members.count(masks[i] ^ masks[j])) continue;
      report.pass = false;
      report.violation = {s, t};
      return report;
    }
  }
  return report;
}

}  // namespace cliffgeom
