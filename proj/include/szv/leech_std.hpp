#ifndef SZV_LEECH_STD_HPP
#define SZV_LEECH_STD_HPP

#include <array>
#include <vector>

#include "szv/golay.hpp"

namespace szv {

using Vec24 = std::array<long, 24>;

// Row-style Hermite normal form over Z: pivots positive, entries above a
// pivot reduced into [0, pivot).  Canonical for a fixed row lattice.
inline std::vector<std::vector<mpz_class>> hnf(
    std::vector<std::vector<mpz_class>> rows) {
  if (rows.empty()) return rows;
  size_t m = rows[0].size();
  std::vector<std::vector<mpz_class>> basis;
  for (size_t col = 0; col < m; ++col) {
    while (true) {
      std::vector<size_t> nz;
      for (size_t r = 0; r < rows.size(); ++r)
        if (rows[r][col] != 0) nz.push_back(r);
      if (nz.empty()) break;
      size_t p = nz[0];
      for (size_t r : nz)
        if (abs(rows[r][col]) < abs(rows[p][col])) p = r;
      bool done = true;
      for (size_t r : nz) {
        if (r == p) continue;
        mpz_class q = rows[r][col] / rows[p][col];  // truncated is fine here
        for (size_t k = 0; k < m; ++k) rows[r][k] -= q * rows[p][k];
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        if (rows[p][col] < 0)
          for (size_t k = 0; k < m; ++k) rows[p][k] = -rows[p][k];
        basis.push_back(rows[p]);
        for (size_t k = 0; k < m; ++k) rows[p][k] = 0;
        break;
      }
    }
  }
  // reduce above-diagonal entries with floor division
  for (size_t idx = 0; idx < basis.size(); ++idx) {
    size_t lead = 0;
    while (basis[idx][lead] == 0) ++lead;
    for (size_t up = 0; up < idx; ++up) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), basis[up][lead].get_mpz_t(),
                 basis[idx][lead].get_mpz_t());
      if (q != 0)
        for (size_t k = 0; k < m; ++k) basis[up][k] -= q * basis[idx][k];
    }
  }
  return basis;
}

// Exact inverse of a square rational matrix (rows x rows).
inline std::vector<std::vector<mpq_class>> mat_inv(
    const std::vector<std::vector<mpq_class>>& M) {
  size_t n = M.size();
  std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(2 * n, 0));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) A[r][c] = M[r][c];
    A[r][n + r] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) throw Error("singular matrix");
    std::swap(A[col], A[piv]);
    mpq_class pv = A[col][col];
    for (auto& x : A[col]) x /= pv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      mpq_class f = A[r][col];
      for (size_t k = 0; k < 2 * n; ++k) A[r][k] -= f * A[col][k];
    }
  }
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) inv[r][c] = A[r][n + c];
  return inv;
}

// Fraction-free determinant (Bareiss) of an integer matrix.
inline mpz_class det_mpz(std::vector<std::vector<mpz_class>> M) {
  size_t n = M.size();
  mpz_class sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && M[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(M[k], M[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

// The standard-coordinate Leech lattice: HNF basis generated from doubled
// Golay rows, (-3,1^23), (4,-4,0...), (4,4,0...), filtered by the
// membership predicate.  Basis-coordinate and predicate membership agree.
class StdLattice {
 public:
  static const StdLattice& instance() {
    static const StdLattice lat;
    return lat;
  }

  const std::array<Vec24, 24>& basis() const { return basis_; }
  const std::array<std::array<long, 24>, 24>& gram() const { return gram_; }

  bool member(const Vec24& v) const { return leech_member(v); }

  std::array<mpq_class, 24> coords(const Vec24& v) const {
    std::array<mpq_class, 24> c;
    for (int j = 0; j < 24; ++j) {
      mpq_class acc = 0;
      for (int k = 0; k < 24; ++k)
        if (v[k]) acc += v[k] * inv_[k][j];
      c[j] = acc;
    }
    return c;
  }

  bool member_by_basis(const Vec24& v) const {
    for (const auto& c : coords(v))
      if (c.get_den() != 1) return false;
    return true;
  }

  // Coordinates mod 2 for a member; bit j = parity of the j-th coordinate.
  uint32_t class_bits(const Vec24& v) const {
    auto c = coords(v);
    uint32_t m = 0;
    for (int j = 0; j < 24; ++j) {
      if (c[j].get_den() != 1) throw Error("class_bits on non-member");
      if (mpz_odd_p(c[j].get_num().get_mpz_t())) m |= 1u << j;
    }
    return m;
  }

  Vec24 from_class_bits(uint32_t bits) const {
    Vec24 v{};
    for (int j = 0; j < 24; ++j)
      if (bits & (1u << j))
        for (int k = 0; k < 24; ++k) v[k] += basis_[j][k];
    return v;
  }

  mpz_class det() const { return det_; }

 private:
  StdLattice() {
    std::vector<std::vector<mpz_class>> cands;
    auto push = [&](const Vec24& v) {
      if (!leech_member(v)) return;
      std::vector<mpz_class> row(24);
      for (int k = 0; k < 24; ++k) row[k] = v[k];
      cands.push_back(std::move(row));
    };
    for (uint32_t r : Golay::instance().basis()) {
      Vec24 v{};
      for (int k = 0; k < 24; ++k) v[k] = 2 * ((r >> k) & 1);
      push(v);
    }
    {
      Vec24 v;
      v.fill(1);
      v[0] = -3;
      push(v);
    }
    for (int k = 1; k < 24; ++k) {
      Vec24 v{};
      v[0] = 4;
      v[k] = -4;
      push(v);
    }
    {
      Vec24 v{};
      v[0] = 4;
      v[1] = 4;
      push(v);
    }
    auto H = hnf(cands);
    std::vector<std::vector<mpz_class>> rows;
    for (auto& r : H) {
      bool nz = false;
      for (auto& x : r) nz = nz || x != 0;
      if (nz) rows.push_back(r);
    }
    if (rows.size() != 24) throw Error("std basis rank != 24");
    det_ = 1;
    for (int k = 0; k < 24; ++k) det_ *= rows[k][k];
    if (det_ != mpz_class(1) << 36) throw Error("std basis determinant wrong");
    std::vector<std::vector<mpq_class>> Bq(24, std::vector<mpq_class>(24));
    for (int r = 0; r < 24; ++r)
      for (int c = 0; c < 24; ++c) {
        if (!rows[r][c].fits_slong_p()) throw Error("basis entry overflow");
        basis_[r][c] = rows[r][c].get_si();
        Bq[r][c] = rows[r][c];
      }
    auto inv = mat_inv(Bq);
    for (int r = 0; r < 24; ++r)
      for (int c = 0; c < 24; ++c) inv_[r][c] = inv[r][c];
    for (int r = 0; r < 24; ++r)
      for (int c = 0; c < 24; ++c) gram_[r][c] = dot24(basis_[r], basis_[c]);
    for (int r = 0; r < 24; ++r)
      if (!member(basis_[r])) throw Error("basis row fails predicate");
  }

  std::array<Vec24, 24> basis_;
  std::array<std::array<mpq_class, 24>, 24> inv_;
  std::array<std::array<long, 24>, 24> gram_;
  mpz_class det_;
};

}  // namespace szv

#endif
