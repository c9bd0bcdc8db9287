#pragma once

// Exact arithmetic in the Clifford group C_m = {±e_S : S ⊆ {1..m}}.
//
// A basis blade e_S is stored as a bitmask with generator j at bit j-1.
// Products never leave the group: e_S e_T = ε(S,T) e_{SΔT}, where ε(S,T)
// is -1 raised to the number of index pairs (s,t) ∈ S×T with s > t.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cliffgeom/errors.hpp"

namespace cliffgeom {

// Blade masks fit a single 64-bit word; 62 keeps every internal shift in range.
inline constexpr int kMaxGenerators = 62;

struct BladeIndex {
  std::uint64_t bits = 0;
  int m = 0;

  friend bool operator==(const BladeIndex&, const BladeIndex&) = default;
};

struct SignedBlade {
  int sign = +1;  // +1 or -1
  BladeIndex index;

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// [a,b] = coefficient * e_blade; coefficient is 0, +2 or -2, and the blade
/// field is meaningful only when the coefficient is nonzero.
struct CommutatorResult {
  int coefficient = 0;
  BladeIndex blade;

  friend bool operator==(const CommutatorResult&, const CommutatorResult&) = default;
};

namespace detail {

inline void require_valid(const BladeIndex& s) {
  if (s.m < 0 || s.m > kMaxGenerators)
    throw DimensionMismatch("generator count " + std::to_string(s.m) + " out of range [0, " +
                            std::to_string(kMaxGenerators) + "]");
  if (s.m < 64 && (s.bits >> s.m) != 0)
    throw DimensionMismatch("blade mask has bits beyond generator count m=" +
                            std::to_string(s.m));
}

inline void require_same_m(const BladeIndex& s, const BladeIndex& t) {
  require_valid(s);
  require_valid(t);
  if (s.m != t.m)
    throw DimensionMismatch("mismatched generator counts: " + std::to_string(s.m) + " vs " +
                            std::to_string(t.m));
}

}  // namespace detail

inline int grade(const BladeIndex& s) { return std::popcount(s.bits); }

/// Parity of |S|: 0 for even blades, 1 for odd ones.
inline int parity(const BladeIndex& s) { return grade(s) & 1; }

/// Reordering sign ε(S,T): for each generator t of T, generators of S above
/// it contribute one inversion; the sign is -1 to the total count. Diagonal
/// pairs s = t count as no inversion.
inline int sign_eps(const BladeIndex& s, const BladeIndex& t) {
  detail::require_same_m(s, t);
  std::uint64_t rest = t.bits;
  int inversions = 0;
  while (rest != 0) {
    const int pos = std::countr_zero(rest);
    inversions += std::popcount(s.bits >> (pos + 1));
    rest &= rest - 1;
  }
  return (inversions & 1) ? -1 : +1;
}

/// Same contract as sign_eps, by the explicit double loop over (s,t) pairs.
/// Shipped so downstream users can cross-validate the fast kernel.
inline int sign_eps_bruteforce(const BladeIndex& s, const BladeIndex& t) {
  detail::require_same_m(s, t);
  int inversions = 0;
  for (std::uint64_t sb = s.bits; sb != 0; sb &= sb - 1) {
    const int spos = std::countr_zero(sb);
    for (std::uint64_t tb = t.bits; tb != 0; tb &= tb - 1) {
      if (spos > std::countr_zero(tb)) ++inversions;
    }
  }
  return (inversions & 1) ? -1 : +1;
}

/// e_S and e_T commute iff |S||T| - |S∩T| is even.
inline bool commutes(const BladeIndex& s, const BladeIndex& t) {
  detail::require_same_m(s, t);
  const int crossings = grade(s) * grade(t) - std::popcount(s.bits & t.bits);
  return (crossings & 1) == 0;
}

inline SignedBlade blade_mul(const SignedBlade& a, const SignedBlade& b) {
  const int eps = sign_eps(a.index, b.index);
  return SignedBlade{a.sign * b.sign * eps, BladeIndex{a.index.bits ^ b.index.bits, a.index.m}};
}

/// a² = (-1)^{r(r-1)/2} e_∅ with r = |S|; the input sign squares away.
inline SignedBlade blade_square(const SignedBlade& a) {
  detail::require_valid(a.index);
  const int r = grade(a.index);
  const int sign = (((r * (r - 1)) / 2) & 1) ? -1 : +1;
  return SignedBlade{sign, BladeIndex{0, a.index.m}};
}

inline CommutatorResult commutator(const SignedBlade& a, const SignedBlade& b) {
  const int eps_st = sign_eps(a.index, b.index);
  const int eps_ts = sign_eps(b.index, a.index);
  const BladeIndex blade{a.index.bits ^ b.index.bits, a.index.m};
  if (eps_st == eps_ts) return CommutatorResult{0, blade};
  return CommutatorResult{2 * a.sign * b.sign * eps_st, blade};
}

/// Image of e_S ⊗ e_T under Cl_n ⊗ Cl_m ≅ Cl_{n+m}: second-factor generators
/// shift up by n. Every first-factor generator precedes every shifted one, so
/// the ordered product contributes no extra sign.
inline SignedBlade embed_super_tensor(const SignedBlade& a, const SignedBlade& b) {
  detail::require_valid(a.index);
  detail::require_valid(b.index);
  const int n = a.index.m;
  const int m = b.index.m;
  if (n + m > kMaxGenerators)
    throw GuardExceeded("super tensor embedding needs " + std::to_string(n + m) +
                        " generators; bound is " + std::to_string(kMaxGenerators));
  return SignedBlade{a.sign * b.sign, BladeIndex{a.index.bits | (b.index.bits << n), n + m}};
}

inline BladeIndex blade_index(int m, std::initializer_list<int> generators) {
  std::uint64_t bits = 0;
  for (int g : generators) {
    if (g < 1 || g > m) throw DimensionMismatch("generator " + std::to_string(g) + " outside 1.." + std::to_string(m));
    const std::uint64_t bit = std::uint64_t{1} << (g - 1);
    if (bits & bit) throw DimensionMismatch("duplicate generator " + std::to_string(g));
    bits |= bit;
  }
  BladeIndex s{bits, m};
  detail::require_valid(s);
  return s;
}

inline SignedBlade blade(int m, std::initializer_list<int> generators, int sign = +1) {
  return SignedBlade{sign, blade_index(m, generators)};
}

inline SignedBlade identity_blade(int m) { return SignedBlade{+1, BladeIndex{0, m}}; }

inline std::vector<int> generators_of(const BladeIndex& s) {
  std::vector<int> out;
  for (std::uint64_t b = s.bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

inline std::string to_string(const BladeIndex& s) {
  if (s.bits == 0) return "e{}";
  std::string out = "e{";
  bool first = true;
  for (int g : generators_of(s)) {
    if (!first) out += ',';
    out += std::to_string(g);
    first = false;
  }
  out += '}';
  return out;
}

inline std::string to_string(const SignedBlade& a) {
  return (a.sign < 0 ? "-" : "+") + to_string(a.index);
}

}  // namespace cliffgeom
