#pragma once
// Concrete permutation groups used by the verification steps, together with
// the 11-dimensional F2-modules carried by the Golay structure.  Every
// constructor certifies the order (and any structural claim) of what it
// builds; a mismatch throws.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "szv/f2.hpp"
#include "szv/f8.hpp"
#include "szv/golay.hpp"
#include "szv/perm.hpp"
#include "szv/permfile.hpp"

namespace szv {

// Directory holding the on-disk group data; the CLI may override it before
// the first group is built.
inline std::string& data_dir() {
  static std::string d =
#ifdef SZV_DATA_DIR
      SZV_DATA_DIR;
#else
      "data";
#endif
  return d;
}

// Image of a 24-bit coordinate mask under a degree-24 permutation.
inline uint32_t perm_mask(uint32_t mask, const Perm& g) {
  uint32_t out = 0;
  for (int i = 0; i < 24; ++i)
    if ((mask >> i) & 1) out |= 1u << g[i];
  return out;
}

// The coordinate block {0..7}; a Golay octad.
constexpr uint32_t octad_block0 = 0xFFu;

// Mathieu group M24 read from disk.  Loading certifies that every generator
// preserves the Golay code (on a basis, hence everywhere) and that the group
// has order 244823040.
inline const PermGroup& m24() {
  static const PermGroup g = [] {
    PermFile f = load_perm_file(data_dir() + "/m24.perm");
    if (f.degree != 24) throw Error("m24: degree is not 24");
    const Golay& code = Golay::instance();
    for (const Perm& p : f.gens)
      for (uint32_t w : code.basis())
        if (!code.contains(perm_mask(w, p)))
          throw Error("m24: generator does not preserve the Golay code");
    PermGroup grp(f.gens, 24);
    if (grp.order() != 244823040) throw Error("m24: order mismatch");
    return grp;
  }();
  return g;
}

// The order-7 coordinate symmetry rotating the imaginary slots of each
// octonion block (i_t -> i_{t+1}); a Golay automorphism fixing block reals.
inline const Perm& sigma7_perm() {
  static const Perm p = [] {
    std::vector<int> img(24);
    for (int b = 0; b < 3; ++b) {
      img[8 * b] = 8 * b;
      for (int t = 0; t < 7; ++t)
        img[8 * b + 1 + t] = 8 * b + 1 + (t + 1) % 7;
    }
    return Perm(img);
  }();
  return p;
}

// Stabilizer of the octad {0..7} in M24; shape 2^4:A8, order 322560.
inline const PermGroup& octad_stabilizer() {
  static const PermGroup g = [] {
    std::vector<int> oct{0, 1, 2, 3, 4, 5, 6, 7};
    PermGroup s = m24().setwise_stabilizer(oct);
    if (s.order() != 322560) throw Error("octad stabilizer: order mismatch");
    return s;
  }();
  return g;
}

// Pointwise kernel of the octad stabilizer on its octad: elementary 2^4.
inline const PermGroup& octad_kernel() {
  static const PermGroup g = [] {
    PermGroup k = octad_stabilizer();
    for (int p = 0; p < 8; ++p) k = k.point_stabilizer(p);
    if (k.order() != 16) throw Error("octad kernel: order mismatch");
    for (const Perm& t : k.generators())
      for (int p = 0; p < 8; ++p)
        if (t[p] != p) throw Error("octad kernel: moves an octad point");
    return k;
  }();
  return g;
}

// A dodecad meeting the block {0..7} octad in six points: the symmetric
// difference of that octad with one meeting it in two points.
inline uint32_t sample_dodecad() {
  const Golay& code = Golay::instance();
  for (uint32_t o : code.octads())
    if (__builtin_popcount(o & octad_block0) == 2) return o ^ octad_block0;
  throw Error("no octad meets block 0 in two points");
}

// Stabilizer in G of the unordered pair {set, complement}, via the orbit of
// the canonical pair key; certified against the pair-orbit size.
inline PermGroup pair_stabilizer(const PermGroup& G,
                                 const std::vector<int>& set) {
  const int n = G.degree();
  const std::vector<Perm>& gens = G.generators();
  auto canon = [n](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    std::vector<char> in(n, 0);
    for (int x : s) in[x] = 1;
    std::vector<int> comp;
    for (int x = 0; x < n; ++x)
      if (!in[x]) comp.push_back(x);
    return std::min(s, comp);
  };
  auto key_of = [](const std::vector<int>& s) {
    std::string k;
    for (int x : s) {
      k.push_back(static_cast<char>(x & 0xff));
      k.push_back(static_cast<char>((x >> 8) & 0xff));
    }
    return k;
  };
  auto apply = [&](const std::vector<int>& s, const Perm& g) {
    std::vector<int> t(s.size());
    for (size_t i = 0; i < s.size(); ++i) t[i] = g[s[i]];
    return canon(t);
  };
  struct Node {
    std::vector<int> set;
    int parent;
    int via_gen;
  };
  std::vector<int> base = canon(set);
  std::vector<Node> nodes{{base, -1, -1}};
  std::unordered_map<std::string, int> index{{key_of(base), 0}};
  for (size_t qi = 0; qi < nodes.size(); ++qi)
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      auto img = apply(nodes[qi].set, gens[gi]);
      auto key = key_of(img);
      if (!index.count(key)) {
        index.emplace(key, static_cast<int>(nodes.size()));
        nodes.push_back({img, static_cast<int>(qi), static_cast<int>(gi)});
      }
    }
  auto trans = [&](int idx) {
    std::vector<int> path;
    while (nodes[idx].parent >= 0) {
      path.push_back(nodes[idx].via_gen);
      idx = nodes[idx].parent;
    }
    Perm t(n);
    for (auto it = path.rbegin(); it != path.rend(); ++it) t = t * gens[*it];
    return t;
  };
  mpz_class target = G.order() / static_cast<long>(nodes.size());
  std::vector<Perm> sg;
  PermGroup acc({}, n);
  for (size_t qi = 0; qi < nodes.size() && acc.order() < target; ++qi) {
    Perm t = trans(static_cast<int>(qi));
    for (size_t gi = 0; gi < gens.size() && acc.order() < target; ++gi) {
      Perm cand = t * gens[gi];
      int img = index.at(key_of(apply(base, cand)));
      Perm s = cand * trans(img).inverse();
      if (s.is_identity() || acc.contains(s)) continue;
      sg.push_back(s);
      acc = PermGroup(sg, n);
    }
  }
  if (acc.order() != target) throw Error("pair stabilizer order mismatch");
  return acc;
}

// Stabilizer in M24 of a dodecad/complement pair: M12:2, order 190080; the
// pair orbit has length 2576/2 = 1288.
inline const PermGroup& dodecad_pair_stabilizer() {
  static const PermGroup g = [] {
    uint32_t d = sample_dodecad();
    std::vector<int> pts;
    for (int i = 0; i < 24; ++i)
      if ((d >> i) & 1) pts.push_back(i);
    PermGroup s = pair_stabilizer(m24(), pts);
    if (s.order() != 190080)
      throw Error("dodecad pair stabilizer: order mismatch");
    return s;
  }();
  return g;
}

// Alternating group A7 on {0..6}.
inline PermGroup alt7() {
  PermGroup g({Perm(std::vector<int>{1, 2, 0, 3, 4, 5, 6}),
               Perm(std::vector<int>{1, 2, 3, 4, 5, 6, 0})},
              7);
  if (g.order() != 2520) throw Error("alt7: order mismatch");
  return g;
}

// PSL(3,2) on the seven nonzero vectors of F_2^3 (point i <-> vector i+1).
inline PermGroup l32_on7() {
  auto perm_of = [](std::array<uint32_t, 3> m) {
    std::vector<int> img(7);
    for (int v = 1; v <= 7; ++v) {
      int w = 0;
      for (int i = 0; i < 3; ++i)
        if ((v >> i) & 1) w ^= static_cast<int>(m[i]);
      img[v - 1] = w - 1;
    }
    return Perm(img);
  };
  PermGroup g({perm_of({2, 4, 3}), perm_of({3, 2, 4})}, 7);
  if (g.order() != 168) throw Error("l32: order mismatch");
  return g;
}

// External direct product acting on the disjoint union of the two domains.
inline PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  int na = a.degree(), nb = b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<int> img(na + nb);
    for (int i = 0; i < na; ++i) img[i] = g[i];
    for (int i = 0; i < nb; ++i) img[na + i] = na + i;
    gens.push_back(Perm(img));
  }
  for (const Perm& g : b.generators()) {
    std::vector<int> img(na + nb);
    for (int i = 0; i < na; ++i) img[i] = i;
    for (int i = 0; i < nb; ++i) img[na + i] = na + g[i];
    gens.push_back(Perm(img));
  }
  PermGroup p(gens, na + nb);
  if (p.order() != a.order() * b.order())
    throw Error("direct product: order mismatch");
  return p;
}

// A7 x PSL(3,2) in degree 14, order 423360.
inline const PermGroup& a7_x_l32() {
  static const PermGroup g = [] {
    PermGroup p = direct_product(alt7(), l32_on7());
    if (p.order() != 423360) throw Error("a7 x l32: order mismatch");
    return p;
  }();
  return g;
}

// Affine group x -> a x + b of the 8-element field on its 8 points; 2^3:7.
inline PermGroup agl18() {
  std::vector<int> add1(8), mule(8);
  for (int x = 0; x < 8; ++x) {
    add1[x] = x ^ 1;
    mule[x] = (F8(static_cast<uint8_t>(x)) * F8::eta()).bits();
  }
  PermGroup g({Perm(add1), Perm(mule)}, 8);
  if (g.order() != 56) throw Error("agl18: order mismatch");
  return g;
}

// SL(2,3) on the eight nonzero vectors of F_3^2 (row-vector action).
inline PermGroup sl23_on8() {
  auto idx = [](int x, int y) { return 3 * x + y - 1; };
  auto perm_of = [&](int a, int b, int c, int d) {
    std::vector<int> img(8);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        if (x == 0 && y == 0) continue;
        img[idx(x, y)] = idx((a * x + c * y) % 3, (b * x + d * y) % 3);
      }
    return Perm(img);
  };
  PermGroup g({perm_of(1, 1, 0, 1), perm_of(0, 2, 1, 0)}, 8);
  if (g.order() != 24) throw Error("sl23: order mismatch");
  return g;
}

// The 49-point affine group 7^2:(3 x SL(2,3)) of order 3528.  The linear
// part is built self-certifyingly inside GL(2,7): the quaternion group
// <i, j>, its normalizer in SL(2,7) (order 48), the derived subgroup of that
// normalizer (SL(2,3), order 24), and the order-3 scalar 2I.
inline const PermGroup& affine49() {
  static const PermGroup result = [] {
    using M2 = std::array<int, 4>;  // row-major (a b; c d) mod 7
    auto mul = [](const M2& p, const M2& q) {
      return M2{(p[0] * q[0] + p[1] * q[2]) % 7, (p[0] * q[1] + p[1] * q[3]) % 7,
                (p[2] * q[0] + p[3] * q[2]) % 7, (p[2] * q[1] + p[3] * q[3]) % 7};
    };
    auto inv = [](const M2& m) {  // adjugate; valid for det 1
      return M2{m[3], (7 - m[1]) % 7, (7 - m[2]) % 7, m[0]};
    };
    auto closure = [&](const std::vector<M2>& gens) {
      std::set<M2> seen(gens.begin(), gens.end());
      seen.insert(M2{1, 0, 0, 1});
      std::vector<M2> queue(seen.begin(), seen.end());
      for (size_t i = 0; i < queue.size(); ++i)
        for (const M2& g : gens) {
          M2 p = mul(queue[i], g);
          if (seen.insert(p).second) queue.push_back(p);
        }
      return queue;
    };
    const M2 qi{0, 6, 1, 0}, qj{2, 3, 3, 5};
    std::vector<M2> q8 = closure({qi, qj});
    if (q8.size() != 8) throw Error("affine49: quaternion size mismatch");
    std::set<M2> q8set(q8.begin(), q8.end());
    std::vector<M2> sl;
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b)
        for (int c = 0; c < 7; ++c)
          for (int d = 0; d < 7; ++d)
            if (((a * d - b * c) % 7 + 7) % 7 == 1) sl.push_back(M2{a, b, c, d});
    if (sl.size() != 336) throw Error("affine49: SL(2,7) size mismatch");
    std::vector<M2> norm;
    for (const M2& g : sl) {
      bool ok = true;
      for (const M2& q : q8)
        if (!q8set.count(mul(mul(g, q), inv(g)))) {
          ok = false;
          break;
        }
      if (ok) norm.push_back(g);
    }
    if (norm.size() != 48) throw Error("affine49: normalizer size mismatch");
    std::set<M2> comm;
    for (const M2& g : norm)
      for (const M2& h : norm) comm.insert(mul(mul(g, h), inv(mul(h, g))));
    std::vector<M2> der =
        closure(std::vector<M2>(comm.begin(), comm.end()));
    if (der.size() != 24) throw Error("affine49: derived size mismatch");
    for (const M2& q : q8)
      if (!std::count(der.begin(), der.end(), q))
        throw Error("affine49: quaternion not inside the derived subgroup");
    std::vector<M2> lin_gens{qi, qj, M2{2, 0, 0, 2}};
    for (const M2& m : der)
      if (!q8set.count(m) && !(m == M2{1, 0, 0, 1})) {
        lin_gens.push_back(m);
        break;
      }
    if (closure(lin_gens).size() != 72)
      throw Error("affine49: linear part size mismatch");
    auto lin_perm = [](const M2& m) {
      std::vector<int> img(49);
      for (int x = 0; x < 7; ++x)
        for (int y = 0; y < 7; ++y)
          img[7 * x + y] =
              7 * ((x * m[0] + y * m[2]) % 7) + (x * m[1] + y * m[3]) % 7;
      return Perm(img);
    };
    std::vector<int> t1(49), t2(49);
    for (int x = 0; x < 7; ++x)
      for (int y = 0; y < 7; ++y) {
        t1[7 * x + y] = 7 * ((x + 1) % 7) + y;
        t2[7 * x + y] = 7 * x + (y + 1) % 7;
      }
    std::vector<Perm> gens{Perm(t1), Perm(t2)};
    for (const M2& m : lin_gens) gens.push_back(lin_perm(m));
    PermGroup g(gens, 49);
    if (g.order() != 3528) throw Error("affine49: order mismatch");
    return g;
  }();
  return result;
}

// Dihedral group of order 8 on a square.
inline PermGroup dihedral8() {
  PermGroup g({Perm(std::vector<int>{1, 2, 3, 0}),
               Perm(std::vector<int>{1, 0, 3, 2})},
              4);
  if (g.order() != 8) throw Error("dihedral8: order mismatch");
  return g;
}

// Elementary abelian 2^k as k disjoint transpositions on 2k points.
inline PermGroup elementary2(int k) {
  std::vector<Perm> gens;
  for (int i = 0; i < k; ++i) {
    std::vector<int> img(2 * k);
    for (int j = 0; j < 2 * k; ++j) img[j] = j;
    img[2 * i] = 2 * i + 1;
    img[2 * i + 1] = 2 * i;
    gens.push_back(Perm(img));
  }
  return PermGroup(gens, 2 * k);
}

// ---------------------------------------------------------------------------
// Golay-derived 11-dimensional F2-modules.  Vectors are 24-bit masks in a
// linear canonical form; action matrices follow the row convention (row i of
// the matrix is the image of basis vector i).

inline std::vector<uint32_t> mask_echelon(const std::vector<uint32_t>& gens) {
  std::array<uint32_t, 24> piv{};
  for (uint32_t g : gens) {
    uint32_t v = g & 0xFFFFFFu;
    while (v) {
      int l = 31 - __builtin_clz(v);
      if (!piv[l]) {
        piv[l] = v;
        break;
      }
      v ^= piv[l];
    }
  }
  std::vector<uint32_t> out;
  for (int l = 23; l >= 0; --l)
    if (piv[l]) out.push_back(piv[l]);
  return out;
}

struct GolayModule {
  std::string name;
  std::vector<uint32_t> basis;                  // echelonized rows
  std::function<uint32_t(uint32_t)> normalize;  // linear canonical form

  int dim() const { return static_cast<int>(basis.size()); }

  std::vector<int> coords(uint32_t v) const {
    std::vector<int> c(basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
      int l = 31 - __builtin_clz(basis[i]);
      if ((v >> l) & 1) {
        c[i] = 1;
        v ^= basis[i];
      }
    }
    if (v) throw Error(name + ": vector outside the module");
    return c;
  }

  F2Mat action(const Perm& g) const {
    F2Mat m(dim(), dim());
    for (int i = 0; i < dim(); ++i) {
      std::vector<int> c = coords(normalize(perm_mask(basis[i], g)));
      for (int j = 0; j < dim(); ++j)
        if (c[j]) m.set(i, j, true);
    }
    return m;
  }

  std::vector<F2Mat> actions(const std::vector<Perm>& gens) const {
    std::vector<F2Mat> out;
    for (const Perm& g : gens) out.push_back(action(g));
    return out;
  }
};

// The Golay code modulo <0, all-ones>: representatives are the codewords
// with the top coordinate clear.
inline GolayModule code_mod_omega_module() {
  const Golay& c = Golay::instance();
  auto norm = [](uint32_t w) {
    return (w >> 23) & 1 ? w ^ 0xFFFFFFu : w;
  };
  std::vector<uint32_t> reps;
  for (uint32_t w : c.basis()) reps.push_back(norm(w));
  GolayModule m{"code-mod-omega", mask_echelon(reps), norm};
  if (m.dim() != 11) throw Error("code-mod-omega: dimension mismatch");
  return m;
}

// The even half of the cocode: canonical coset representatives of the
// even-weight masks.
inline GolayModule even_cocode_module() {
  const Golay& c = Golay::instance();
  auto norm = [&c](uint32_t w) { return c.reduce(w); };
  std::vector<uint32_t> reps;
  for (int k = 1; k < 24; ++k) reps.push_back(norm(1u | (1u << k)));
  GolayModule m{"even-cocode", mask_echelon(reps), norm};
  if (m.dim() != 11) throw Error("even-cocode: dimension mismatch");
  return m;
}

}  // namespace szv
