#pragma once

#include <cstdint>
#include <vector>

#include "szv/dyadic.hpp"

namespace szv {

// Dense matrix over F2, rows packed into 64-bit words.
class F2Mat {
 public:
  F2Mat() : rows_(0), cols_(0), words_(0) {}
  F2Mat(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64),
        data_(static_cast<size_t>(rows) * words_, 0) {}

  static F2Mat identity(int n) {
    F2Mat m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    return (word(r)[c >> 6] >> (c & 63)) & 1u;
  }
  void set(int r, int c, bool v) {
    uint64_t mask = uint64_t(1) << (c & 63);
    if (v)
      word(r)[c >> 6] |= mask;
    else
      word(r)[c >> 6] &= ~mask;
  }
  void flip(int r, int c) { word(r)[c >> 6] ^= uint64_t(1) << (c & 63); }

  void xor_row(int dst, int src) {
    uint64_t* d = word(dst);
    const uint64_t* s = word(src);
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
  }
  void swap_rows(int a, int b) {
    uint64_t* pa = word(a);
    uint64_t* pb = word(b);
    for (int w = 0; w < words_; ++w) std::swap(pa[w], pb[w]);
  }
  bool row_zero(int r) const {
    const uint64_t* p = word(r);
    for (int w = 0; w < words_; ++w)
      if (p[w]) return false;
    return true;
  }

  std::vector<bool> row(int r) const {
    std::vector<bool> v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = get(r, c);
    return v;
  }
  void set_row(int r, const std::vector<bool>& v) {
    for (int c = 0; c < cols_; ++c) set(r, c, v[c]);
  }

  bool operator==(const F2Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const F2Mat& o) const { return !(*this == o); }

  F2Mat transpose() const {
    F2Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r, true);
    return t;
  }

  // Row-reduce in place; returns rank.  Pivot columns in increasing order.
  int rref(std::vector<int>* pivots = nullptr) {
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
      int p = -1;
      for (int r = rank; r < rows_; ++r)
        if (get(r, c)) {
          p = r;
          break;
        }
      if (p < 0) continue;
      swap_rows(rank, p);
      for (int r = 0; r < rows_; ++r)
        if (r != rank && get(r, c)) xor_row(r, rank);
      if (pivots) pivots->push_back(c);
      ++rank;
    }
    return rank;
  }

  int rank() const {
    F2Mat m = *this;
    return m.rref();
  }

  // Basis for the right null space, one row per basis vector.
  F2Mat kernel() const {
    F2Mat m = *this;
    std::vector<int> pivots;
    int rank = m.rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    F2Mat ker(cols_ - rank, cols_);
    int kr = 0;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      ker.set(kr, c, true);
      for (int r = 0; r < rank; ++r)
        if (m.get(r, c)) ker.set(kr, pivots[r], true);
      ++kr;
    }
    return ker;
  }

  // Solve x * this = target over F2 for a single row vector; returns
  // (solved, x).  Row-vector convention to match row-major group actions.
  std::pair<bool, std::vector<bool>> solve_left(
      const std::vector<bool>& target) const {
    F2Mat aug(rows_ + 1, cols_ + rows_);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) aug.set(r, c, get(r, c));
      aug.set(r, cols_ + r, true);
    }
    for (int c = 0; c < cols_; ++c) aug.set(rows_, c, target[c]);
    // eliminate target row against matrix rows
    int rank = 0;
    std::vector<int> pivots;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
      int p = -1;
      for (int r = rank; r < rows_; ++r)
        if (aug.get(r, c)) {
          p = r;
          break;
        }
      if (p < 0) continue;
      aug.swap_rows(rank, p);
      for (int r = 0; r <= rows_; ++r)
        if (r != rank && aug.get(r, c)) aug.xor_row(r, rank);
      pivots.push_back(c);
      ++rank;
    }
    for (int c = 0; c < cols_; ++c)
      if (aug.get(rows_, c)) return {false, {}};
    std::vector<bool> x(rows_, false);
    for (int r = 0; r < rows_; ++r) x[r] = aug.get(rows_, cols_ + r);
    return {true, x};
  }

  // Membership of a row vector in the row space.
  bool in_row_space(const std::vector<bool>& v) const {
    return solve_left(v).first;
  }

  uint64_t* word(int r) { return data_.data() + static_cast<size_t>(r) * words_; }
  const uint64_t* word(int r) const {
    return data_.data() + static_cast<size_t>(r) * words_;
  }

 private:
  int rows_, cols_, words_;
  std::vector<uint64_t> data_;
};

// Product as row-vector action: (A*B)[i] = sum_k A[i][k] B[k].
inline F2Mat f2mul(const F2Mat& a, const F2Mat& b) {
  if (a.cols() != b.rows()) throw Error("F2Mat shape mismatch");
  F2Mat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      if (a.get(i, k)) {
        uint64_t* d = r.word(i);
        const uint64_t* s = b.word(k);
        for (int w = 0; w < (b.cols() + 63) / 64; ++w) d[w] ^= s[w];
      }
  return r;
}

inline F2Mat f2pow(const F2Mat& a, uint64_t e) {
  F2Mat r = F2Mat::identity(a.rows());
  F2Mat b = a;
  while (e) {
    if (e & 1) r = f2mul(r, b);
    b = f2mul(b, b);
    e >>= 1;
  }
  return r;
}

// Stack rows of two matrices with equal column count.
inline F2Mat f2stack(const F2Mat& a, const F2Mat& b) {
  if (a.cols() != b.cols()) throw Error("F2Mat stack mismatch");
  F2Mat r(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int c = 0; c < a.cols(); ++c) r.set(i, c, a.get(i, c));
  for (int i = 0; i < b.rows(); ++i)
    for (int c = 0; c < a.cols(); ++c) r.set(a.rows() + i, c, b.get(i, c));
  return r;
}

}  // namespace szv
