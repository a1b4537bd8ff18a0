#ifndef SZV_F2MODULE_HPP
#define SZV_F2MODULE_HPP

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "szv/f2.hpp"

namespace szv {

// Polynomials over F2 as bitmasks (bit k = coefficient of x^k).

inline uint32_t f2p_mul(uint32_t a, uint32_t b) {
  uint32_t r = 0;
  for (int k = 0; a >> k; ++k)
    if ((a >> k) & 1) r ^= b << k;
  return r;
}

inline int f2p_deg(uint32_t a) { return a ? 31 - __builtin_clz(a) : -1; }

inline uint32_t f2p_mod(uint32_t a, uint32_t m) {
  int dm = f2p_deg(m);
  for (int k = f2p_deg(a); k >= dm; k = f2p_deg(a)) a ^= m << (k - dm);
  return a;
}

// Irreducible factors with multiplicity.  Ascending trial division: the
// smallest nontrivial divisor of the remaining cofactor is irreducible.
inline std::vector<uint32_t> f2p_factor(uint32_t a) {
  std::vector<uint32_t> out;
  for (uint32_t d = 2; f2p_deg(d) <= f2p_deg(a) && a > 1;) {
    if (f2p_mod(a, d) == 0) {
      out.push_back(d);
      uint32_t q = 0, r = a;
      int dd = f2p_deg(d);
      while (f2p_deg(r) >= dd) {
        int k = f2p_deg(r) - dd;
        q ^= 1u << k;
        r ^= d << k;
      }
      if (r != 0) throw Error("factor division mismatch");
      a = q;
      continue;
    }
    ++d;
  }
  if (a > 1) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

// x^7 + 1 = (x+1)(x^3+x+1)(x^3+x^2+1)
inline std::vector<uint32_t> factor_x7_plus_1() {
  auto f = f2p_factor((1u << 7) | 1u);
  uint32_t prod = 1;
  for (uint32_t g : f) prod = f2p_mul(prod, g);
  if (prod != ((1u << 7) | 1u)) throw Error("x^7+1 refactor mismatch");
  return f;
}

inline F2Mat f2poly_eval(uint32_t poly, const F2Mat& M) {
  int n = M.rows();
  F2Mat acc(n, n);  // zero
  F2Mat pw = F2Mat::identity(n);
  for (int k = 0; poly >> k; ++k) {
    if ((poly >> k) & 1) {
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (pw.get(r, c)) acc.flip(r, c);
    }
    pw = f2mul(pw, M);
  }
  return acc;
}

// Isotypic decomposition of an order-7 action: row bases of the kernels of
// the three factor polynomials evaluated at the matrix.
struct C7Isotypic {
  F2Mat fixed;   // kernel of M + 1
  F2Mat a;       // kernel of (x^3+x+1)(M)
  F2Mat b;       // kernel of (x^3+x^2+1)(M)
};

inline C7Isotypic isotypic_c7(const F2Mat& M) {
  if (f2pow(M, 7) != F2Mat::identity(M.rows()))
    throw Error("isotypic_c7: order does not divide 7");
  auto f = factor_x7_plus_1();
  // row convention: component for factor g is {v : v * g(M) = 0}
  C7Isotypic out{f2poly_eval(f[0], M).transpose().kernel(),
                 f2poly_eval(f[1], M).transpose().kernel(),
                 f2poly_eval(f[2], M).transpose().kernel()};
  if (out.fixed.rows() + out.a.rows() + out.b.rows() != M.rows())
    throw Error("isotypic dimensions do not sum");
  return out;
}

// Multiplicities (m1, ma, mb) of the three simple F2[C7]-modules.
inline std::array<int, 3> c7_multiplicities(const F2Mat& M) {
  C7Isotypic iso = isotypic_c7(M);
  if (iso.a.rows() % 3 || iso.b.rows() % 3)
    throw Error("free isotypic dimension not divisible by 3");
  return {iso.fixed.rows(), iso.a.rows() / 3, iso.b.rows() / 3};
}

// Restriction of an action matrix to an invariant row space: solves
// basis * M = R * basis for R.
inline F2Mat restrict_action(const F2Mat& basis, const F2Mat& M) {
  int k = basis.rows();
  F2Mat R(k, k);
  F2Mat img = f2mul(basis, M);
  for (int r = 0; r < k; ++r) {
    auto [ok, coef] = basis.solve_left(img.row(r));
    if (!ok) throw Error("row space not invariant");
    for (int c = 0; c < k; ++c)
      if (coef[c]) R.set(r, c, true);
  }
  return R;
}

// F2[C7]-module isomorphism: explicit intertwiner X with X A = B X and X
// invertible, or the distinguishing multiplicity vectors.
struct ModuleIso {
  bool isomorphic;
  F2Mat intertwiner;                  // valid when isomorphic
  std::array<int, 3> inv_a, inv_b;    // multiplicity invariants
};

inline ModuleIso module_iso(const F2Mat& A, const F2Mat& B) {
  ModuleIso out{};
  out.inv_a = c7_multiplicities(A);
  out.inv_b = c7_multiplicities(B);
  if (out.inv_a != out.inv_b) {
    out.isomorphic = false;
    return out;
  }
  int n = A.rows();
  // solve the Sylvester system X*A + B*X = 0 over F2: variables X entries
  F2Mat sys(n * n, n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int eq = r * n + c;  // coefficient of equation (r,c): (XA)_rc + (BX)_rc
      for (int k = 0; k < n; ++k) {
        if (A.get(k, c)) sys.flip(eq, r * n + k);  // X_rk A_kc
        if (B.get(r, k)) sys.flip(eq, k * n + c);  // B_rk X_kc
      }
    }
  F2Mat hom = sys.kernel();  // row basis of solutions
  std::mt19937_64 rng(12345);
  for (int tries = 0; tries < 4096; ++tries) {
    std::vector<char> sel(hom.rows(), 0);
    if (tries < hom.rows())
      sel[tries] = 1;
    else
      for (auto& s : sel) s = char(rng() & 1);
    F2Mat X(n, n);
    bool any = false;
    for (int h = 0; h < hom.rows(); ++h)
      if (sel[h]) {
        any = true;
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c)
            if (hom.get(h, r * n + c)) X.flip(r, c);
      }
    if (!any) continue;
    if (X.rank() == n) {
      if (f2mul(X, A) != f2mul(B, X)) throw Error("intertwiner check failed");
      out.isomorphic = true;
      out.intertwiner = X;
      return out;
    }
  }
  throw Error("equal invariants but no invertible intertwiner found");
}

// Submodule generated by a vector under a list of action matrices.
inline F2Mat spin(const std::vector<bool>& seed,
                  const std::vector<F2Mat>& gens, int n) {
  F2Mat basis(0, n);
  std::vector<std::vector<bool>> queue{seed};
  auto add = [&](const std::vector<bool>& v) {
    if (basis.in_row_space(v)) return false;
    F2Mat nb(basis.rows() + 1, n);
    for (int r = 0; r < basis.rows(); ++r)
      for (int c = 0; c < n; ++c)
        if (basis.get(r, c)) nb.set(r, c, true);
    for (int c = 0; c < n; ++c)
      if (v[c]) nb.set(basis.rows(), c, true);
    basis = nb;
    return true;
  };
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    if (!add(v)) continue;
    for (const auto& g : gens) {
      F2Mat vm(1, n);
      for (int c = 0; c < n; ++c)
        if (v[c]) vm.set(0, c, true);
      queue.push_back(f2mul(vm, g).row(0));
    }
  }
  return basis;  // echelonize by caller if needed
}

// Socle of the module: sum of all minimal submodules.  two_gens generate
// any 2-subgroup; every simple submodule meets its fixed space, so spinning
// the fixed vectors finds all minimal submodules.
inline F2Mat socle(const std::vector<F2Mat>& gens,
                   const std::vector<F2Mat>& two_gens, int n) {
  F2Mat fix = F2Mat::identity(n);
  for (const auto& t : two_gens) {
    F2Mat diff(n, n);  // t + 1
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        bool v = t.get(r, c) ^ (r == c);
        if (v) diff.set(r, c, true);
      }
    // intersect fix with {v : v*diff = 0}
    F2Mat ker = diff.transpose().kernel();
    F2Mat stack = f2stack(fix, ker);
    F2Mat rel = stack.transpose().kernel();  // row combos summing to zero
    F2Mat ni(rel.rows(), n);
    for (int r = 0; r < rel.rows(); ++r)
      for (int k = 0; k < fix.rows(); ++k)
        if (rel.get(r, k))
          for (int c = 0; c < n; ++c)
            if (fix.get(k, c)) ni.flip(r, c);
    int rk = ni.rref();
    F2Mat red(rk, n);
    for (int r = 0; r < rk; ++r)
      for (int c = 0; c < n; ++c)
        if (ni.get(r, c)) red.set(r, c, true);
    fix = red;
  }
  if (fix.rows() == 0) throw Error("2-subgroup has no fixed vectors");
  // minimal spins among fixed vectors
  std::vector<F2Mat> spins;
  int m = fix.rows();
  if (m > 16) throw Error("fixed space too large to enumerate");
  for (uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<bool> v(n, false);
    for (int k = 0; k < m; ++k)
      if ((mask >> k) & 1)
        for (int c = 0; c < n; ++c) v[c] = v[c] ^ fix.get(k, c);
    spins.push_back(spin(v, gens, n));
  }
  // keep the minimal ones (by containment), sum them
  F2Mat soc(0, n);
  for (size_t i = 0; i < spins.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < spins.size() && minimal; ++j)
      if (spins[j].rank() < spins[i].rank()) {
        bool contained = true;
        for (int r = 0; r < spins[j].rows() && contained; ++r)
          if (!spins[i].in_row_space(spins[j].row(r))) contained = false;
        if (contained) minimal = false;
      }
    if (minimal) soc = f2stack(soc, spins[i]);
  }
  int rk = soc.rref();
  F2Mat out(rk, n);
  for (int r = 0; r < rk; ++r)
    for (int c = 0; c < n; ++c)
      if (soc.get(r, c)) out.set(r, c, true);
  return out;
}

inline F2Mat f2inv(const F2Mat& a) {
  int n = a.rows();
  if (a.cols() != n) throw Error("f2inv: not square");
  F2Mat aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.set(r, c, a.get(r, c));
    aug.set(r, n + r, true);
  }
  std::vector<int> piv;
  if (aug.rref(&piv) != n || piv.back() >= n) throw Error("f2inv: singular");
  F2Mat inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.set(r, c, aug.get(r, n + c));
  return inv;
}

// Induced action on the quotient by an invariant row space (sub in rref).
// Quotient basis: standard vectors at the non-pivot columns.
inline F2Mat quotient_action(const F2Mat& sub, const F2Mat& g) {
  int n = g.rows();
  std::vector<int> piv(sub.rows(), -1);
  std::vector<bool> is_piv(n, false);
  for (int r = 0; r < sub.rows(); ++r)
    for (int c = 0; c < n; ++c)
      if (sub.get(r, c)) {
        piv[r] = c;
        is_piv[c] = true;
        break;
      }
  std::vector<int> comp;
  for (int c = 0; c < n; ++c)
    if (!is_piv[c]) comp.push_back(c);
  int k = comp.size();
  F2Mat q(k, k);
  for (int i = 0; i < k; ++i) {
    std::vector<bool> w = g.row(comp[i]);
    for (int r = 0; r < sub.rows(); ++r)
      if (w[piv[r]])
        for (int c = 0; c < n; ++c) w[c] = w[c] ^ sub.get(r, c);
    for (int j = 0; j < k; ++j)
      if (w[comp[j]]) q.set(i, j, true);
  }
  return q;
}

inline bool is_simple_module(const std::vector<F2Mat>& gens, int n) {
  if (n == 0) return false;
  if (n > 12) throw Error("simplicity test dimension too large");
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<bool> v(n, false);
    for (int c = 0; c < n; ++c) v[c] = (mask >> c) & 1;
    if (spin(v, gens, n).rank() < n) return false;
  }
  return true;
}

struct SocleSeries {
  std::vector<int> layer_dims;  // bottom-up
  bool uniserial;
};

inline SocleSeries socle_series(std::vector<F2Mat> gens,
                                std::vector<F2Mat> two_gens, int n) {
  SocleSeries out{{}, true};
  while (n > 0) {
    F2Mat soc = socle(gens, two_gens, n);
    out.layer_dims.push_back(soc.rows());
    std::vector<F2Mat> layer;
    for (const auto& g : gens) layer.push_back(restrict_action(soc, g));
    if (!is_simple_module(layer, soc.rows())) out.uniserial = false;
    if (soc.rows() == n) break;
    std::vector<F2Mat> ng, nt;
    for (const auto& g : gens) ng.push_back(quotient_action(soc, g));
    for (const auto& t : two_gens) nt.push_back(quotient_action(soc, t));
    gens = ng;
    two_gens = nt;
    n -= soc.rows();
  }
  return out;
}

// Radical series layer dims via the dual module (transpose-inverse action):
// an independent route to the composition factor multiset.
inline std::vector<int> radical_layer_dims(const std::vector<F2Mat>& gens,
                                           const std::vector<F2Mat>& two_gens,
                                           int n) {
  std::vector<F2Mat> dg, dt;
  for (const auto& g : gens) dg.push_back(f2inv(g).transpose());
  for (const auto& t : two_gens) dt.push_back(f2inv(t).transpose());
  auto s = socle_series(dg, dt, n);
  std::reverse(s.layer_dims.begin(), s.layer_dims.end());
  return s.layer_dims;
}

// Dimension of Ext^1(A, B) over F2 for a finite group given by its full
// multiplication table.  Cocycles: Z(gh) = Z(g) rhoB(h) + rhoA(g) Z(h);
// coboundaries: Z_C(g) = rhoA(g) C + C rhoB(g).
struct ExtResult {
  int z_dim, b_dim, ext_dim;
};

inline ExtResult ext1(const std::vector<std::vector<int>>& mul, int identity,
                      const std::vector<F2Mat>& actA,
                      const std::vector<F2Mat>& actB) {
  int N = mul.size();
  int da = actA[0].rows(), db = actB[0].rows();
  int blk = da * db;
  auto var = [&](int g, int r, int c) {  // g != identity
    int idx = g < identity ? g : g - 1;
    return idx * blk + r * db + c;
  };
  int nvars = (N - 1) * blk;
  std::vector<std::vector<bool>> eqs;
  for (int g = 0; g < N; ++g)
    for (int h = 0; h < N; ++h) {
      int gh = mul[g][h];
      for (int r = 0; r < da; ++r)
        for (int c = 0; c < db; ++c) {
          std::vector<bool> eq(nvars, false);
          if (gh != identity) eq[var(gh, r, c)] = !eq[var(gh, r, c)];
          if (g != identity)  // (Z(g) rhoB(h))_rc
            for (int k = 0; k < db; ++k)
              if (actB[h].get(k, c)) eq[var(g, r, k)] = !eq[var(g, r, k)];
          if (h != identity)  // (rhoA(g) Z(h))_rc
            for (int k = 0; k < da; ++k)
              if (actA[g].get(r, k)) eq[var(h, k, c)] = !eq[var(h, k, c)];
          bool nz = false;
          for (int i = 0; i < nvars && !nz; ++i) nz = eq[i];
          if (nz) eqs.push_back(std::move(eq));
        }
    }
  F2Mat sys(eqs.size(), nvars);
  for (size_t r = 0; r < eqs.size(); ++r) sys.set_row(r, eqs[r]);
  ExtResult out{};
  out.z_dim = nvars - sys.rank();
  F2Mat cob(blk, nvars);
  for (int r = 0; r < da; ++r)
    for (int c = 0; c < db; ++c) {
      int row = r * db + c;  // basis coboundary from C = e_rc
      for (int g = 0; g < N; ++g) {
        if (g == identity) continue;
        for (int i = 0; i < da; ++i)  // (rhoA(g) e_rc)_ik = rhoA(g)_ir [k=c]
          if (actA[g].get(i, r)) cob.flip(row, var(g, i, c));
        for (int k = 0; k < db; ++k)  // (e_rc rhoB(g))_ik = [i=r] rhoB(g)_ck
          if (actB[g].get(c, k)) cob.flip(row, var(g, r, k));
      }
    }
  out.b_dim = cob.rank();
  out.ext_dim = out.z_dim - out.b_dim;
  if (out.ext_dim < 0) throw Error("coboundaries exceed cocycles");
  return out;
}

}  // namespace szv

#endif
