#pragma once

// Exact matrix representations of Cl_m. The generators are realized by
// σ₃-string (Jordan–Wigner) words on ⌊m/2⌋ qubits:
//   e_{2k-1} ↦ σ₃^{⊗(k-1)} ⊗ σ₁ ⊗ I…,   e_{2k} ↦ σ₃^{⊗(k-1)} ⊗ σ₂ ⊗ I…,
// and for odd m the last generator is the full string e_m ↦ σ₃^{⊗n},
// n = (m-1)/2, so the representation space has dimension 2^{(m-1)/2}.
// At m = 3 this is exactly e_j ↦ σ_j.
//
// Every blade image has one nonzero entry per row (a Pauli word), which the
// verification paths exploit through a sparse word form; the public surface
// stays in terms of dense GaussMatrix values.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cliffgeom/blade.hpp"
#include "cliffgeom/gaussian.hpp"

namespace cliffgeom {

inline constexpr int kDefaultRepGuard = 13;
inline constexpr int kDefaultRankGuard = 9;

/// σ₀ = I, σ₁ = [[0,1],[1,0]], σ₂ = [[0,-i],[i,0]], σ₃ = [[1,0],[0,-1]].
inline GaussMatrix pauli(int alpha) {
  GaussMatrix m(2);
  switch (alpha) {
    case 0:
      m.at(0, 0) = GaussInt{1, 0};
      m.at(1, 1) = GaussInt{1, 0};
      break;
    case 1:
      m.at(0, 1) = GaussInt{1, 0};
      m.at(1, 0) = GaussInt{1, 0};
      break;
    case 2:
      m.at(0, 1) = GaussInt{0, -1};
      m.at(1, 0) = GaussInt{0, 1};
      break;
    case 3:
      m.at(0, 0) = GaussInt{1, 0};
      m.at(1, 1) = GaussInt{-1, 0};
      break;
    default:
      throw DimensionMismatch("pauli index must be 0..3");
  }
  return m;
}

namespace detail {

/// A matrix with exactly one nonzero per row: row r carries val[r] at
/// column col[r]. Closed under multiplication; every blade image is one.
struct WordMatrix {
  std::vector<std::uint32_t> col;
  std::vector<GaussInt> val;

  int dim() const { return static_cast<int>(col.size()); }

  static WordMatrix identity(int dim) {
    WordMatrix w;
    w.col.resize(dim);
    w.val.assign(dim, GaussInt{1, 0});
    for (int r = 0; r < dim; ++r) w.col[r] = r;
    return w;
  }

  static WordMatrix from_dense(const GaussMatrix& m) {
    WordMatrix w;
    w.col.resize(m.dim());
    w.val.resize(m.dim());
    for (int r = 0; r < m.dim(); ++r) {
      int hits = 0;
      for (int c = 0; c < m.dim(); ++c) {
        if (!m.at(r, c).is_zero()) {
          w.col[r] = c;
          w.val[r] = m.at(r, c);
          ++hits;
        }
      }
      if (hits != 1) throw DimensionMismatch("matrix is not a Pauli word");
    }
    return w;
  }

  GaussMatrix to_dense() const {
    GaussMatrix m(dim());
    for (int r = 0; r < dim(); ++r) m.at(r, static_cast<int>(col[r])) = val[r];
    return m;
  }

  friend WordMatrix operator*(const WordMatrix& a, const WordMatrix& b) {
    WordMatrix out;
    out.col.resize(a.col.size());
    out.val.resize(a.col.size());
    for (std::size_t r = 0; r < a.col.size(); ++r) {
      out.col[r] = b.col[a.col[r]];
      out.val[r] = a.val[r] * b.val[a.col[r]];
    }
    return out;
  }

  WordMatrix negated() const {
    WordMatrix out = *this;
    for (auto& v : out.val) v = -v;
    return out;
  }

  std::optional<GaussInt> as_scalar_identity() const {
    for (std::size_t r = 0; r < col.size(); ++r)
      if (col[r] != r || val[r] != val[0]) return std::nullopt;
    return val.empty() ? std::nullopt : std::optional<GaussInt>(val[0]);
  }

  friend bool operator==(const WordMatrix&, const WordMatrix&) = default;
};

}  // namespace detail

inline int jw_qubit_count(int m) { return m / 2; }

/// The representation of Cl_m with generator images cached as words.
class JWRep {
 public:
  explicit JWRep(int m, int guard = kDefaultRepGuard, bool negate_last = false) : m_(m) {
    if (m < 1) throw DimensionMismatch("representation requires m >= 1");
    if (m > guard)
      throw GuardExceeded("representation for m=" + std::to_string(m) + " exceeds guard " +
                          std::to_string(guard));
    const int n = jw_qubit_count(m);
    dim_ = 1 << n;
    gens_.reserve(m);
    for (int j = 1; j <= m; ++j) {
      GaussMatrix g = GaussMatrix::identity(1);
      if (j == m && (m & 1)) {
        for (int q = 0; q < n; ++q) g = kron(g, pauli(3));
      } else {
        const int k = (j + 1) / 2;  // qubit slot, 1-based
        for (int q = 1; q <= n; ++q) {
          if (q < k)
            g = kron(g, pauli(3));
          else if (q == k)
            g = kron(g, pauli(j % 2 == 1 ? 1 : 2));
          else
            g = kron(g, pauli(0));
        }
      }
      gens_.push_back(detail::WordMatrix::from_dense(g));
    }
    if (negate_last) gens_.back() = gens_.back().negated();
  }

  int m() const { return m_; }
  int dim() const { return dim_; }

  const detail::WordMatrix& generator_word(int j) const {
    if (j < 1 || j > m_) throw DimensionMismatch("generator index outside 1..m");
    return gens_[j - 1];
  }

  detail::WordMatrix blade_word(const SignedBlade& a) const {
    detail::require_valid(a.index);
    if (a.index.m != m_) throw DimensionMismatch("blade over wrong generator count");
    detail::WordMatrix w = detail::WordMatrix::identity(dim_);
    for (std::uint64_t b = a.index.bits; b != 0; b &= b - 1)
      w = w * gens_[std::countr_zero(b)];
    if (a.sign < 0) w = w.negated();
    return w;
  }

  GaussMatrix blade(const SignedBlade& a) const { return blade_word(a).to_dense(); }

 private:
  int m_;
  int dim_;
  std::vector<detail::WordMatrix> gens_;
};

inline GaussMatrix jw_generator(int j, int m, int guard = kDefaultRepGuard) {
  return JWRep(m, guard).blade(SignedBlade{+1, blade_index(m, {j})});
}

/// Sign times the ordered product of generator images over S ascending.
inline GaussMatrix rep_blade(const SignedBlade& a, int guard = kDefaultRepGuard) {
  return JWRep(a.index.m, guard).blade(a);
}

/// Exact check of e_j e_k + e_k e_j = 2δ_{jk} I, all m(m+1)/2 pairs.
inline bool verify_clifford_relations(const JWRep& rep) {
  const GaussMatrix id = GaussMatrix::identity(rep.dim());
  const GaussMatrix zero(rep.dim());
  const GaussMatrix two_id = GaussInt{2, 0} * id;
  for (int j = 1; j <= rep.m(); ++j) {
    const GaussMatrix gj = rep.generator_word(j).to_dense();
    for (int k = j; k <= rep.m(); ++k) {
      const GaussMatrix gk = rep.generator_word(k).to_dense();
      const GaussMatrix anti = gj * gk + gk * gj;
      if (anti != (j == k ? two_id : zero)) return false;
    }
  }
  return true;
}

inline bool verify_clifford_relations(int m, int guard = kDefaultRepGuard) {
  return verify_clifford_relations(JWRep(m, guard));
}

struct HomReport {
  bool pass = true;
  std::uint64_t pairs_checked = 0;
  bool exhaustive = true;
};

/// rep(ab) = rep(a)·rep(b): exhaustive over basis pairs for m <= 7, seeded
/// random pairs beyond.
inline HomReport verify_representation_hom(int m, int guard = kDefaultRepGuard,
                                           std::uint64_t samples = 10'000,
                                           std::uint64_t seed = 0) {
  const JWRep rep(m, guard);
  HomReport report;
  auto check_pair = [&](const SignedBlade& a, const SignedBlade& b) {
    ++report.pairs_checked;
    const auto lhs = rep.blade_word(blade_mul(a, b));
    const auto rhs = rep.blade_word(a) * rep.blade_word(b);
    if (!(lhs == rhs)) report.pass = false;
  };

  if (m <= 7) {
    const std::uint64_t count = std::uint64_t{1} << m;
    std::vector<detail::WordMatrix> images(count);
    for (std::uint64_t s = 0; s < count; ++s)
      images[s] = rep.blade_word(SignedBlade{+1, BladeIndex{s, m}});
    for (std::uint64_t s = 0; s < count && report.pass; ++s) {
      for (std::uint64_t t = 0; t < count; ++t) {
        ++report.pairs_checked;
        const SignedBlade prod = blade_mul(SignedBlade{+1, BladeIndex{s, m}},
                                           SignedBlade{+1, BladeIndex{t, m}});
        detail::WordMatrix expect = images[prod.index.bits];
        if (prod.sign < 0) expect = expect.negated();
        if (!(expect == images[s] * images[t])) {
          report.pass = false;
          break;
        }
      }
    }
    return report;
  }

  report.exhaustive = false;
  std::mt19937_64 rng(seed);
  const std::uint64_t mask_limit = std::uint64_t{1} << m;
  for (std::uint64_t i = 0; i < samples && report.pass; ++i) {
    const SignedBlade a{rng() % 2 ? +1 : -1, BladeIndex{rng() % mask_limit, m}};
    const SignedBlade b{rng() % 2 ? +1 : -1, BladeIndex{rng() % mask_limit, m}};
    check_pair(a, b);
  }
  return report;
}

/// Rank over the Gaussian rationals of the 2^m flattened blade images. For
/// odd m the image is the whole matrix algebra, so the rank is 2^{m-1}.
inline int span_rank(int m, int rank_guard = kDefaultRankGuard) {
  if (m < 1) throw DimensionMismatch("span_rank requires m >= 1");
  if (m % 2 == 0)
    throw std::invalid_argument("span_rank covers the full-matrix-algebra claim for odd m only");
  if (m > rank_guard)
    throw GuardExceeded("span_rank for m=" + std::to_string(m) + " exceeds guard " +
                        std::to_string(rank_guard));
  const JWRep rep(m, std::max(m, kDefaultRepGuard));
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<detail::WordMatrix> words(count);
  words[0] = detail::WordMatrix::identity(rep.dim());
  std::vector<std::vector<GaussInt>> rows;
  rows.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    if (s != 0) {
      const int high = 63 - std::countl_zero(s);
      words[s] = words[s ^ (std::uint64_t{1} << high)] * rep.generator_word(high + 1);
    }
    rows.push_back(words[s].to_dense().flatten());
  }
  return bareiss_rank(std::move(rows));
}

struct IrrepsReport {
  bool pass = false;
  GaussInt top_scalar_primary;
  GaussInt top_scalar_secondary;
};

/// For odd m, the second representation negates e_m's image. Both satisfy
/// the Clifford relations, and the central top blade e_{1..m} maps to λI
/// with exactly opposite λ, so they are inequivalent.
inline IrrepsReport two_irreps_distinct(int m, int rank_guard = kDefaultRankGuard) {
  if (m < 1) throw DimensionMismatch("two_irreps_distinct requires m >= 1");
  if (m % 2 == 0)
    throw std::invalid_argument("the two-irreducibles claim applies to odd m only");
  if (m > rank_guard)
    throw GuardExceeded("two_irreps_distinct for m=" + std::to_string(m) + " exceeds guard " +
                        std::to_string(rank_guard));
  const int rep_guard = std::max(m, kDefaultRepGuard);
  const JWRep primary(m, rep_guard, /*negate_last=*/false);
  const JWRep secondary(m, rep_guard, /*negate_last=*/true);

  IrrepsReport report;
  if (!verify_clifford_relations(primary) || !verify_clifford_relations(secondary)) return report;

  const std::uint64_t top = (std::uint64_t{1} << m) - 1;
  const SignedBlade top_blade{+1, BladeIndex{top, m}};
  const auto s1 = primary.blade_word(top_blade).as_scalar_identity();
  const auto s2 = secondary.blade_word(top_blade).as_scalar_identity();
  if (!s1 || !s2) return report;
  report.top_scalar_primary = *s1;
  report.top_scalar_secondary = *s2;
  report.pass = !s1->is_zero() && (*s2 == -*s1);
  return report;
}

/// A formal Pauli word per tensor factor; words are strictly increasing, the
/// empty word prints as I. Labels name points, so no phase is tracked.
struct PauliLabel {
  std::vector<std::vector<int>> factors;

  std::string str() const {
    static const char* kSigma[4] = {"", "σ₁", "σ₂", "σ₃"};
    std::string out;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f) out += " ⊗ ";
      if (factors[f].empty()) {
        out += "I";
        continue;
      }
      for (int s : factors[f]) out += kSigma[s];
    }
    return out;
  }

  std::string latex() const {
    std::string out;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f) out += " \\otimes ";
      if (factors[f].empty()) {
        out += "I";
        continue;
      }
      for (int s : factors[f]) out += "\\sigma_" + std::to_string(s);
    }
    return out;
  }

  friend bool operator==(const PauliLabel&, const PauliLabel&) = default;
};

/// Factor k of N receives the generators of S inside {3k-2, 3k-1, 3k} as
/// σ indices 1..3.
inline PauliLabel label_blade_as_pauli(const BladeIndex& s, int N) {
  detail::require_valid(s);
  if (N < 1 || s.m != 3 * N)
    throw DimensionMismatch("labeling requires m = 3N (got m=" + std::to_string(s.m) +
                            ", N=" + std::to_string(N) + ")");
  PauliLabel label;
  label.factors.resize(N);
  for (int f = 0; f < N; ++f)
    for (int t = 0; t < 3; ++t)
      if ((s.bits >> (3 * f + t)) & 1) label.factors[f].push_back(t + 1);
  return label;
}

}  // namespace cliffgeom
