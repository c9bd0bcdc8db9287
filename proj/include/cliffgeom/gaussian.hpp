#pragma once

// Exact matrices over the Gaussian integers Z[i]. Every entry that occurs in
// a Pauli-word computation lies in {0, ±1, ±i}, but products, sums and the
// fraction-free elimination below are exact for arbitrary entries. No
// floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffgeom/errors.hpp"

namespace cliffgeom {

using BigInt = boost::multiprecision::cpp_int;

struct GaussInt {
  BigInt re = 0;
  BigInt im = 0;

  GaussInt() = default;
  GaussInt(long r) : re(r) {}  // NOLINT: implicit from integer literals
  GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
  static GaussInt i_unit() { return GaussInt{0, 1}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussInt conj() const { return GaussInt{re, -im}; }
  BigInt norm() const { return re * re + im * im; }

  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return GaussInt{a.re + b.re, a.im + b.im};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return GaussInt{a.re - b.re, a.im - b.im};
  }
  friend GaussInt operator-(const GaussInt& a) { return GaussInt{-a.re, -a.im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return GaussInt{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussInt& operator+=(const GaussInt& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;

  /// Exact quotient a/b in Z[i]; throws if b does not divide a.
  friend GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
    if (b.is_zero()) throw std::domain_error("Gaussian division by zero");
    const GaussInt num = a * b.conj();
    const BigInt den = b.norm();
    if (num.re % den != 0 || num.im % den != 0)
      throw std::domain_error("inexact Gaussian division");
    return GaussInt{num.re / den, num.im / den};
  }

  std::string str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return (im == 1 ? "i" : im == -1 ? "-i" : im.str() + "i");
    return re.str() + (im > 0 ? "+" : "") + (im == 1 ? "i" : im == -1 ? "-i" : im.str() + "i");
  }
};

class GaussMatrix {
 public:
  GaussMatrix() = default;
  explicit GaussMatrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim) {}

  static GaussMatrix identity(int dim) {
    GaussMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = GaussInt{1, 0};
    return m;
  }

  int dim() const { return dim_; }
  GaussInt& at(int r, int c) { return e_[static_cast<std::size_t>(r) * dim_ + c]; }
  const GaussInt& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * dim_ + c]; }

  friend GaussMatrix operator*(const GaussMatrix& a, const GaussMatrix& b) {
    check_dims(a, b);
    GaussMatrix out(a.dim_);
    for (int i = 0; i < a.dim_; ++i) {
      for (int k = 0; k < a.dim_; ++k) {
        const GaussInt& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.dim_; ++j) {
          const GaussInt& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          out.at(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend GaussMatrix operator+(const GaussMatrix& a, const GaussMatrix& b) {
    check_dims(a, b);
    GaussMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
    return out;
  }

  friend GaussMatrix operator-(const GaussMatrix& a, const GaussMatrix& b) {
    check_dims(a, b);
    GaussMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] - b.e_[i];
    return out;
  }

  friend GaussMatrix operator*(const GaussInt& s, const GaussMatrix& a) {
    GaussMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = s * a.e_[i];
    return out;
  }

  GaussMatrix conj_transpose() const {
    GaussMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) out.at(c, r) = at(r, c).conj();
    return out;
  }

  GaussInt trace() const {
    GaussInt t;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_identity() const { return *this == identity(dim_); }

  /// λ such that the matrix equals λ·I, if any.
  std::optional<GaussInt> as_scalar_identity() const {
    if (dim_ == 0) return std::nullopt;
    const GaussInt lambda = at(0, 0);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c)
        if (at(r, c) != (r == c ? lambda : GaussInt{})) return std::nullopt;
    return lambda;
  }

  friend bool operator==(const GaussMatrix&, const GaussMatrix&) = default;

  /// Row-major flattening, used for rank computations over blade images.
  std::vector<GaussInt> flatten() const { return e_; }

 private:
  static void check_dims(const GaussMatrix& a, const GaussMatrix& b) {
    if (a.dim_ != b.dim_)
      throw DimensionMismatch("matrix dimensions " + std::to_string(a.dim_) + " vs " +
                              std::to_string(b.dim_));
  }

  int dim_ = 0;
  std::vector<GaussInt> e_;
};

inline GaussMatrix kron(const GaussMatrix& a, const GaussMatrix& b) {
  GaussMatrix out(a.dim() * b.dim());
  for (int ar = 0; ar < a.dim(); ++ar) {
    for (int ac = 0; ac < a.dim(); ++ac) {
      const GaussInt& f = a.at(ar, ac);
      if (f.is_zero()) continue;
      for (int br = 0; br < b.dim(); ++br)
        for (int bc = 0; bc < b.dim(); ++bc) {
          if (b.at(br, bc).is_zero()) continue;
          out.at(ar * b.dim() + br, ac * b.dim() + bc) = f * b.at(br, bc);
        }
    }
  }
  return out;
}

/// Rank over the Gaussian rationals by fraction-free (Bareiss) elimination.
/// Consumes the row set. Division by the previous pivot is exact by the
/// Sylvester identity, which keeps intermediate entries as Gaussian integers.
inline int bareiss_rank(std::vector<std::vector<GaussInt>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != ncols) throw DimensionMismatch("ragged row set in bareiss_rank");

  std::size_t rank = 0;
  GaussInt prev{1, 0};
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows.size() && rows[pivot_row][col].is_zero()) ++pivot_row;
    if (pivot_row == rows.size()) continue;
    std::swap(rows[rank], rows[pivot_row]);
    const GaussInt pivot = rows[rank][col];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const GaussInt head = rows[i][col];
      if (head.is_zero()) {
        for (std::size_t j = col; j < ncols; ++j) {
          if (rows[i][j].is_zero()) continue;
          rows[i][j] = exact_div(pivot * rows[i][j], prev);
        }
      } else {
        for (std::size_t j = col; j < ncols; ++j) {
          const GaussInt v = pivot * rows[i][j] - head * rows[rank][j];
          rows[i][j] = v.is_zero() ? GaussInt{} : exact_div(v, prev);
        }
      }
    }
    prev = pivot;
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace cliffgeom
