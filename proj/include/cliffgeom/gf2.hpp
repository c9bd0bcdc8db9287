#pragma once

// The quotient V_m = C_m / {±I} is an m-dimensional vector space over Z₂.
// Vectors reuse the blade bitmask layout; addition is XOR. Subspaces carry a
// reduced-echelon basis with the pivot of each row at its lowest set bit, so
// every subspace has exactly one representation.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cliffgeom/blade.hpp"
#include "cliffgeom/errors.hpp"

namespace cliffgeom {

inline constexpr int kDefaultEnumerationGuard = 6;

struct GF2Vector {
  std::uint64_t bits = 0;
  int m = 0;

  bool is_zero() const { return bits == 0; }
  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
};

inline GF2Vector operator^(const GF2Vector& a, const GF2Vector& b) {
  if (a.m != b.m)
    throw DimensionMismatch("GF2 vectors of dimension " + std::to_string(a.m) + " and " +
                            std::to_string(b.m));
  return GF2Vector{a.bits ^ b.bits, a.m};
}

/// Quotient homomorphism C_m → V_m: forget the sign.
inline GF2Vector blade_to_vector(const SignedBlade& a) {
  detail::require_valid(a.index);
  return GF2Vector{a.index.bits, a.index.m};
}

/// Section of the quotient: a vector names the positive blade +e_S.
inline BladeIndex blade_index_of(const GF2Vector& v) { return BladeIndex{v.bits, v.m}; }

class GF2Subspace {
 public:
  GF2Subspace() = default;
  explicit GF2Subspace(int m) : m_(m) {}

  /// Rows must already be in reduced echelon form (pivots = lowest set bit,
  /// strictly increasing, pivot bit clear in every other row).
  static GF2Subspace from_echelon(int m, std::vector<std::uint64_t> rows) {
    GF2Subspace s(m);
    s.rows_ = std::move(rows);
    return s;
  }

  int ambient_dim() const { return m_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::uint64_t>& basis() const { return rows_; }

  void insert(GF2Vector v) {
    check_m(v);
    std::uint64_t x = reduce_bits(v.bits);
    if (x == 0) return;
    const int pivot = std::countr_zero(x);
    for (auto& row : rows_)
      if ((row >> pivot) & 1) row ^= x;
    auto it = rows_.begin();
    while (it != rows_.end() && std::countr_zero(*it) < pivot) ++it;
    rows_.insert(it, x);
  }

  bool contains(const GF2Vector& v) const {
    check_m(v);
    return reduce_bits(v.bits) == 0;
  }

  /// All 2^dim elements, zero included, in basis-combination order.
  std::vector<GF2Vector> elements() const {
    std::vector<GF2Vector> out;
    out.reserve(std::size_t{1} << rows_.size());
    for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << rows_.size()); ++combo) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if ((combo >> i) & 1) v ^= rows_[i];
      out.push_back(GF2Vector{v, m_});
    }
    return out;
  }

  std::vector<GF2Vector> nonzero_elements() const {
    std::vector<GF2Vector> out = elements();
    out.erase(out.begin());  // combo 0 is the zero vector
    return out;
  }

  friend bool operator==(const GF2Subspace&, const GF2Subspace&) = default;

 private:
  void check_m(const GF2Vector& v) const {
    if (v.m != m_)
      throw DimensionMismatch("vector of dimension " + std::to_string(v.m) +
                              " against subspace of ambient dimension " + std::to_string(m_));
  }

  std::uint64_t reduce_bits(std::uint64_t x) const {
    for (std::uint64_t row : rows_) {
      if ((x >> std::countr_zero(row)) & 1) x ^= row;
    }
    return x;
  }

  int m_ = 0;
  std::vector<std::uint64_t> rows_;
};

inline GF2Subspace span(int m, const std::vector<GF2Vector>& vs) {
  GF2Subspace s(m);
  for (const auto& v : vs) s.insert(v);
  return s;
}

inline GF2Subspace span(const std::vector<GF2Vector>& vs) {
  if (vs.empty()) return GF2Subspace(0);
  return span(vs.front().m, vs);
}

/// Gaussian binomial [m choose k]_2: the number of k-dimensional subspaces
/// of Z₂^m. Recurrence [m k] = [m-1 k-1] + 2^k [m-1 k].
inline std::uint64_t gaussian_binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(m) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, m); j >= 1; --j)
      row[j] = row[j - 1] + (row[j] << j);
  }
  return row[k];
}

/// All k-dimensional subspaces of Z₂^m, each exactly once, by direct
/// generation of reduced echelon forms: choose pivot positions, then every
/// assignment of the free (non-pivot, above-pivot) entries.
inline std::vector<GF2Subspace> enumerate_subspaces(int m, int k,
                                                    int guard = kDefaultEnumerationGuard) {
  if (m < 0 || k < 0 || k > m)
    throw DimensionMismatch("enumerate_subspaces(" + std::to_string(m) + "," +
                            std::to_string(k) + ")");
  if (m > guard)
    throw GuardExceeded("subspace enumeration for m=" + std::to_string(m) +
                        " exceeds guard " + std::to_string(guard));
  std::vector<GF2Subspace> out;
  if (k == 0) {
    out.push_back(GF2Subspace(m));
    return out;
  }

  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  for (;;) {
    // Free slots, in row-major / ascending-position order.
    std::vector<std::pair<int, int>> free_slots;  // (row, bit position)
    std::uint64_t pivot_mask = 0;
    for (int p : pivots) pivot_mask |= std::uint64_t{1} << p;
    for (int row = 0; row < k; ++row)
      for (int q = pivots[row] + 1; q < m; ++q)
        if (!((pivot_mask >> q) & 1)) free_slots.emplace_back(row, q);

    for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << free_slots.size()); ++assign) {
      std::vector<std::uint64_t> rows(k);
      for (int row = 0; row < k; ++row) rows[row] = std::uint64_t{1} << pivots[row];
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        if ((assign >> s) & 1) rows[free_slots[s].first] |= std::uint64_t{1} << free_slots[s].second;
      out.push_back(GF2Subspace::from_echelon(m, std::move(rows)));
    }

    // Next k-combination of {0..m-1} in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pivots[i] == m - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

}  // namespace cliffgeom
