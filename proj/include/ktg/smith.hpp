#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ktg/abelian.hpp"

namespace ktg {

// Dense row-major integer matrix. Exact arithmetic only.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("IntMatrix: data size mismatch");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Int x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = checked_fma(r(i, j), x, b(k, j));
      }
    return r;
  }

  // r + x*y with overflow detection.
  static Int checked_fma(Int r, Int x, Int y) {
    Int p = 0, s = 0;
    if (__builtin_mul_overflow(x, y, &p) || __builtin_add_overflow(r, p, &s)) {
      throw std::overflow_error("IntMatrix: 64-bit overflow");
    }
    return s;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// U * M * V = S with U, V unimodular and S diagonal, s1 | s2 | ...,
// diagonal entries nonnegative.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  std::vector<Int> diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
  }
};

namespace detail {

// Elementary operations applied simultaneously to S and to the matching
// transform (rows -> U, columns -> V).
struct SmithWork {
  IntMatrix S, U, V;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < S.cols(); ++j) std::swap(S(a, j), S(b, j));
    for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < S.rows(); ++i) std::swap(S(i, a), S(i, b));
    for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, Int k) {
    for (std::size_t j = 0; j < S.cols(); ++j) S(dst, j) = IntMatrix::checked_fma(S(dst, j), k, S(src, j));
    for (std::size_t j = 0; j < U.cols(); ++j) U(dst, j) = IntMatrix::checked_fma(U(dst, j), k, U(src, j));
  }
  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, Int k) {
    for (std::size_t i = 0; i < S.rows(); ++i) S(i, dst) = IntMatrix::checked_fma(S(i, dst), k, S(i, src));
    for (std::size_t i = 0; i < V.rows(); ++i) V(i, dst) = IntMatrix::checked_fma(V(i, dst), k, V(i, src));
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < S.cols(); ++j) S(r, j) = -S(r, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
  }
};

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

// Pivot rule: the nonzero entry of smallest absolute value in the remaining
// block (first in row-major order on ties) is moved to the corner; the row
// is cleared, then the column, repeating until both are clear. A corner that
// fails to divide the rest of the block absorbs the offending row.
inline SmithForm smith_normal_form(const IntMatrix& M) {
  detail::SmithWork w{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols())};
  const std::size_t rows = M.rows(), cols = M.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Smallest nonzero pivot in the block [t.., t..].
      std::size_t pr = rows, pc = cols;
      Int best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          Int v = std::llabs(w.S(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (best == 0) break;  // block is zero; remaining diagonal is zero
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);

      bool dirty = false;
      Int p = w.S(t, t);
      for (std::size_t j = t + 1; j < cols; ++j) {
        Int q = detail::floor_div(w.S(t, j), p);
        if (q != 0) w.add_col(j, t, -q);
        if (w.S(t, j) != 0) dirty = true;
      }
      for (std::size_t i = t + 1; i < rows; ++i) {
        Int q = detail::floor_div(w.S(i, t), p);
        if (q != 0) w.add_row(i, t, -q);
        if (w.S(i, t) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column are clear; enforce divisibility of the block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (w.S(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      w.add_row(t, bad, 1);
    }
    if (w.S(t, t) < 0) w.negate_row(t);
  }
  return SmithForm{std::move(w.U), std::move(w.S), std::move(w.V)};
}

}  // namespace ktg
