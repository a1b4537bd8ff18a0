#ifndef SZV_ENUMERATE_HPP
#define SZV_ENUMERATE_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <vector>

#include "szv/leech_std.hpp"

namespace szv {

// Exact short/close vector enumeration (Fincke-Pohst over an LDL^T split of
// the Gram matrix).  Every pruning decision is an exact integer comparison:
// the rational LDL data is cleared to a single global denominator at
// construction, so the search runs on 128-bit integers.  Floating point only
// seeds interval endpoints, which are then fixed under exact tests.

// Heuristic basis reduction (floating-point LLL).  Only efficiency depends
// on it: the rows are changed by exact unimodular integer operations, so the
// generated lattice — and hence every enumeration result — is unchanged.
inline std::vector<Vec24> lll_rows(std::vector<Vec24> b) {
  size_t n = b.size();
  std::vector<std::vector<double>> mu(n, std::vector<double>(n, 0));
  std::vector<double> B(n, 0);
  auto gso = [&] {
    std::vector<std::vector<double>> bs(n, std::vector<double>(24));
    for (size_t i = 0; i < n; ++i) {
      for (int k = 0; k < 24; ++k) bs[i][k] = static_cast<double>(b[i][k]);
      for (size_t j = 0; j < i; ++j) {
        double num = 0;
        for (int k = 0; k < 24; ++k) num += b[i][k] * bs[j][k];
        mu[i][j] = B[j] > 0 ? num / B[j] : 0;
        for (int k = 0; k < 24; ++k) bs[i][k] -= mu[i][j] * bs[j][k];
      }
      double nb = 0;
      for (int k = 0; k < 24; ++k) nb += bs[i][k] * bs[i][k];
      B[i] = nb;
    }
  };
  gso();
  size_t k = 1;
  for (int guard = 0; k < n && guard < 100000; ++guard) {
    for (size_t j = k; j-- > 0;) {
      long q = std::llround(mu[k][j]);
      if (q)
        for (int t = 0; t < 24; ++t) b[k][t] -= q * b[j][t];
    }
    gso();
    if (B[k] >= (0.99 - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gso();
      k = k > 1 ? k - 1 : 1;
    }
  }
  return b;
}

class Enumerator {
  using i128 = __int128;

 public:
  explicit Enumerator(std::vector<Vec24> rows) : rows_(lll_rows(std::move(rows))) {
    n_ = rows_.size();
    if (n_ == 0 || n_ > 24) throw Error("enumerator rank out of range");
    std::vector<std::vector<mpq_class>> G(n_, std::vector<mpq_class>(n_));
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j) G[i][j] = dot24(rows_[i], rows_[j]);
    mu_.assign(n_, std::vector<mpq_class>(n_, 0));
    d_.assign(n_, 0);
    for (size_t j = 0; j < n_; ++j) {
      mpq_class dj = G[j][j];
      for (size_t k = 0; k < j; ++k) dj -= mu_[j][k] * mu_[j][k] * d_[k];
      if (dj <= 0) throw Error("gram not positive definite");
      d_[j] = dj;
      for (size_t i = j + 1; i < n_; ++i) {
        mpq_class v = G[i][j];
        for (size_t k = 0; k < j; ++k) v -= mu_[i][k] * mu_[j][k] * d_[k];
        mu_[i][j] = v / dj;
      }
    }
    // integer clearing: column denominators, global scale Dg
    auto fit64 = [](const mpz_class& z, const char* what) {
      if (!z.fits_slong_p()) throw Error(std::string("overflow in ") + what);
      return static_cast<int64_t>(z.get_si());
    };
    A_.assign(n_, std::array<int64_t, 24>{});
    mpz_class lc = 1;
    for (size_t i = 0; i < n_; ++i) {
      mpz_class bi = 1;
      for (size_t j = i + 1; j < n_; ++j)
        mpz_lcm(bi.get_mpz_t(), bi.get_mpz_t(),
                mu_[j][i].get_den().get_mpz_t());
      B_[i] = fit64(bi, "column denominator");
      for (size_t j = i + 1; j < n_; ++j) {
        mpq_class a = mu_[j][i] * bi;
        if (a.get_den() != 1) throw Error("column clearing failed");
        A_[i][j] = fit64(a.get_num(), "cleared mu");
      }
      P_[i] = fit64(d_[i].get_num(), "d numerator");
      Q_[i] = fit64(d_[i].get_den(), "d denominator");
      mpz_class qb = d_[i].get_den() * bi * bi;
      mpz_lcm(lc.get_mpz_t(), lc.get_mpz_t(), qb.get_mpz_t());
    }
    Dg_ = lc * W_ * W_;
    for (size_t i = 0; i < n_; ++i) {
      mpz_class t = Dg_ / (mpz_class(Q_[i]) * B_[i] * B_[i] * W_ * W_);
      PT_[i] = mpz_class(P_[i]) * t;  // d_i * (B_i W)^2 * Dg scale
    }
  }

  // All u = v + a.rows with u.u <= bound, one representative per {u,-u}
  // pair, sorted.  budget counts enumeration tree nodes.
  std::vector<Vec24> close_vectors(const Vec24& v, long bound,
                                   long budget = 100000000L) const {
    Call cs;
    std::vector<Vec24> out;
    cs.out = &out;
    if (prepare(cs, v, bound, budget))
      node(n_ - 1, cs.res_scaled, cs);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Smallest norm over the coset, or -1 if above bound.  Branch-and-bound
  // with exact decisions; stops once the global floor 32 is certain (only
  // the zero class goes lower, via the zero vector itself).
  long min_norm(const Vec24& v, long bound, long budget = 100000000L) const {
    Call cs;
    cs.minimize = true;
    cs.best = bound + 1;
    if (prepare(cs, v, bound, budget))
      node(n_ - 1, cs.res_scaled, cs);
    return cs.best > bound ? -1 : cs.best;
  }

  static Vec24 sign_normalize(const Vec24& w) {
    for (int k = 0; k < 24; ++k) {
      if (w[k] > 0) return w;
      if (w[k] < 0) {
        Vec24 m;
        for (int j = 0; j < 24; ++j) m[j] = -w[j];
        return m;
      }
    }
    return w;
  }

 private:
  struct Call {
    std::array<int64_t, 24> Cw{};  // c_i * W
    std::array<int64_t, 24> U{};   // W*x_j - Cw_j on the current path
    std::array<long, 24> xs{};
    mpz_class res_scaled;    // projection residue * Dg
    mpz_class bound_scaled;  // current bound * Dg
    std::array<mpz_class, 24> k2, tot, used2;  // per-level scratch
    long best = 0;
    long nodes = 0;
    long budget = 0;
    Vec24 v{};
    std::vector<Vec24>* out = nullptr;
    bool minimize = false;
  };

  // Solves the projection exactly; returns false if the whole coset lies
  // above the bound.
  bool prepare(Call& cs, const Vec24& v, long bound, long budget) const {
    cs.v = v;
    cs.budget = budget;
    std::vector<mpq_class> rhs(n_), y(n_), c(n_);
    for (size_t i = 0; i < n_; ++i) rhs[i] = -dot24(rows_[i], v);
    for (size_t i = 0; i < n_; ++i) {
      mpq_class t = rhs[i];
      for (size_t k = 0; k < i; ++k) t -= mu_[i][k] * d_[k] * y[k];
      y[i] = t / d_[i];
    }
    for (size_t i = n_; i-- > 0;) {
      mpq_class t = y[i];
      for (size_t k = i + 1; k < n_; ++k) t -= mu_[k][i] * c[k];
      c[i] = t;
    }
    mpq_class res = dot24(v, v);
    for (size_t i = 0; i < n_; ++i) res -= rhs[i] * c[i];
    for (size_t i = 0; i < n_; ++i) {
      mpq_class cw = c[i] * W_;
      if (cw.get_den() != 1 || !cw.get_num().fits_slong_p())
        throw Error("projection not on the expected grid");
      cs.Cw[i] = cw.get_num().get_si();
    }
    mpq_class rs = res * Dg_;
    if (rs.get_den() != 1) throw Error("residue not on the expected grid");
    cs.res_scaled = rs.get_num();
    long b = cs.minimize ? cs.best : bound;
    cs.bound_scaled = b * Dg_;
    return cs.res_scaled <= bound * Dg_;
  }

  // Exact per-level descent; returns true to abort (floor reached).
  bool node(size_t i, const mpz_class& used, Call& cs) const {
    if (++cs.nodes > cs.budget) throw Error("enumeration budget exceeded");
    int64_t O = 0;
    for (size_t j = i + 1; j < n_; ++j)
      if (cs.U[j]) O += A_[i][j] * cs.U[j];
    int64_t N = cs.Cw[i] * B_[i] - O;
    int64_t S = B_[i] * W_;
    mpz_class& k2 = cs.k2[i];
    mpz_class& tot = cs.tot[i];
    auto total_at = [&](long x) -> mpz_class& {
      int64_t K = S * x - N;
      mpz_set_si(k2.get_mpz_t(), K);
      mpz_mul(k2.get_mpz_t(), k2.get_mpz_t(), k2.get_mpz_t());
      mpz_mul(tot.get_mpz_t(), PT_[i].get_mpz_t(), k2.get_mpz_t());
      mpz_add(tot.get_mpz_t(), tot.get_mpz_t(), used.get_mpz_t());
      return tot;
    };
    auto admissible = [&](long x) {
      int c = mpz_cmp(total_at(x).get_mpz_t(), cs.bound_scaled.get_mpz_t());
      // minimization needs strict improvement, listing needs closure
      return cs.minimize ? c < 0 : c <= 0;
    };
    auto enter = [&](long x) -> bool {  // true aborts the whole search
      cs.used2[i] = total_at(x);
      cs.xs[i] = x;
      cs.U[i] = W_ * x - cs.Cw[i];
      if (i > 0) return node(i - 1, cs.used2[i], cs);
      Vec24 u = cs.v;
      for (size_t j = 0; j < n_; ++j)
        if (cs.xs[j])
          for (int k = 0; k < 24; ++k) u[k] += cs.xs[j] * rows_[j][k];
      long norm = dot24(u, u);
      if (norm * Dg_ != cs.used2[i]) throw Error("scaled arithmetic mismatch");
      if (cs.out) cs.out->push_back(sign_normalize(u));
      if (cs.minimize && norm < cs.best) {
        cs.best = norm;
        cs.bound_scaled = norm * Dg_;
        if (cs.best <= 32) return true;
      }
      return false;
    };
    double xc = static_cast<double>(N) / S;
    if (!cs.minimize) {
      mpz_class rem = cs.bound_scaled - used;
      double rad = std::sqrt(std::max(
                       0.0, rem.get_d() / PT_[i].get_d())) /
                   S;
      long lo = static_cast<long>(std::floor(xc - rad)) - 1;
      long hi = static_cast<long>(std::ceil(xc + rad)) + 1;
      while (admissible(lo - 1)) --lo;
      while (admissible(hi + 1)) ++hi;
      while (lo <= hi && !admissible(lo)) ++lo;
      while (lo <= hi && !admissible(hi)) --hi;
      for (long x = lo; x <= hi; ++x) {
        if (std::abs(x) > (1L << 22)) throw Error("range runaway");
        if (enter(x)) {
          cs.U[i] = 0;
          cs.xs[i] = 0;
          return true;
        }
      }
    } else {
      // zig-zag from the projected centre so the bound shrinks early
      long x0 = std::llround(xc);
      bool up_alive = true, down_alive = true;
      for (long step = 0; up_alive || down_alive; ++step) {
        if (step > (1L << 22)) throw Error("range runaway");
        if (up_alive) {
          long x = x0 + step;
          if (!admissible(x)) {
            up_alive = false;
          } else if (enter(x)) {
            cs.U[i] = 0;
            cs.xs[i] = 0;
            return true;
          }
        }
        if (step && down_alive) {
          long x = x0 - step;
          if (!admissible(x)) {
            down_alive = false;
          } else if (enter(x)) {
            cs.U[i] = 0;
            cs.xs[i] = 0;
            return true;
          }
        }
      }
    }
    cs.U[i] = 0;
    cs.xs[i] = 0;
    return false;
  }

  std::vector<Vec24> rows_;
  size_t n_;
  std::vector<std::vector<mpq_class>> mu_;
  std::vector<mpq_class> d_;
  std::vector<std::array<int64_t, 24>> A_;  // A_[i][j] = mu[j][i] * B_[i]
  std::array<int64_t, 24> B_{}, P_{}, Q_{};
  std::array<mpz_class, 24> PT_;  // d_i * (B_i W)^2 * (Dg / (B_i W)^2 Q_i)
  static constexpr int64_t W_ = 32;
  mpz_class Dg_;
};

inline const Enumerator& lattice_enum() {
  static const Enumerator e = [] {
    std::vector<Vec24> rows(StdLattice::instance().basis().begin(),
                            StdLattice::instance().basis().end());
    return Enumerator(std::move(rows));
  }();
  return e;
}

inline const Enumerator& coset_enum() {
  static const Enumerator e = [] {
    std::vector<Vec24> rows;
    for (const Vec24& b : StdLattice::instance().basis()) {
      Vec24 r;
      for (int k = 0; k < 24; ++k) r[k] = 2 * b[k];
      rows.push_back(r);
    }
    return Enumerator(std::move(rows));
  }();
  return e;
}

// Vectors of the class v + 2L with norm <= bound, one per sign pair.
inline std::vector<Vec24> coset_min_vectors(const Vec24& v, long bound,
                                            long budget = 100000000L) {
  if (!leech_member(v)) throw Error("coset_min_vectors: not a member");
  return coset_enum().close_vectors(v, bound, budget);
}

// Minimal norm of the class, divided by 16.  Classes of the quotient have
// minimal norm at most 64; escalating bounds guard the claim.
inline int class_type(const Vec24& v) {
  if (!leech_member(v)) throw Error("class_type: not a member");
  uint32_t key = StdLattice::instance().class_bits(v);
  static std::map<uint32_t, int> memo;
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  for (long bound : {64L, 96L, 128L}) {
    long mn = coset_enum().min_norm(v, bound);
    if (mn < 0) continue;
    if (mn % 16) throw Error("class minimum not divisible by 16");
    int t = static_cast<int>(mn / 16);
    memo[key] = t;
    return t;
  }
  throw Error("class minimum above 128");
}

struct Frame {
  std::vector<Vec24> reps;  // 24 vectors, one per sign pair
};

// A type-4 class holds exactly 48 minimal vectors forming a scaled
// coordinate cross; returns the 24 sign representatives, orthogonality and
// norm certified exactly.
inline Frame cross_frame(const Vec24& v) {
  auto vs = coset_min_vectors(v, 64);
  if (vs.size() != 24) throw Error("frame size != 24");
  for (size_t i = 0; i < vs.size(); ++i) {
    if (dot24(vs[i], vs[i]) != 64) throw Error("frame vector norm != 64");
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (dot24(vs[i], vs[j]) != 0) throw Error("frame not orthogonal");
  }
  return Frame{vs};
}

inline Vec24 canonical_frame_rep(const Frame& f) {
  return *std::min_element(f.reps.begin(), f.reps.end());
}

using Profile = std::map<long, int>;  // |dot| -> count, 576 entries total

inline Profile pair_profile_from(const Frame& a, const Frame& b) {
  Profile p;
  for (const auto& f : a.reps)
    for (const auto& g : b.reps) p[std::abs(dot24(f, g))]++;
  return p;
}

inline long form_b(const Vec24& u, const Vec24& w) {
  long d = dot24(u, w);
  if (d % 8) throw Error("inner product not divisible by 8");
  return (d / 8) & 1;
}

inline long form_q(const Vec24& u) {
  long d = dot24(u, u);
  if (d % 16) throw Error("norm not divisible by 16");
  return (d / 16) & 1;
}

inline const Profile& profile_a() {
  static const Profile p{{0, 480}, {32, 96}};
  return p;
}
inline const Profile& profile_b() {
  static const Profile p{{0, 288}, {16, 256}, {32, 32}};
  return p;
}
inline const Profile& profile_c() {
  static const Profile p{{0, 264}, {16, 288}, {32, 24}};
  return p;
}

// Classifies a pair of commuting type-4 classes spanning a totally singular
// four-group: requires B(u,w) = 0 and type(u+w) = 4, then matches the frame
// dot profile against the three reference profiles.
inline char classify_pure22(const Vec24& u, const Vec24& w) {
  if (form_b(u, w) != 0) throw Error("classify_pure22: B(u,w) != 0");
  Vec24 s;
  for (int k = 0; k < 24; ++k) s[k] = u[k] + w[k];
  if (class_type(u) != 4 || class_type(w) != 4 || class_type(s) != 4)
    throw Error("classify_pure22: classes not all of type 4");
  Profile p = pair_profile_from(cross_frame(u), cross_frame(w));
  if (p == profile_a()) return 'a';
  if (p == profile_b()) return 'b';
  if (p == profile_c()) return 'c';
  throw Error("classify_pure22: profile matches no reference");
}

}  // namespace szv

#endif
