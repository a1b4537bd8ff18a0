#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "szv/enumerate.hpp"
#include "szv/f2module.hpp"
#include "szv/f8.hpp"
#include "szv/leech_oct.hpp"

namespace szv {

// --- classes of the mod-2 quotient as 24-bit coordinate masks ---

inline uint32_t row_bits24(const F2Mat& m, int r) {
  return uint32_t(m.word(r)[0] & 0xFFFFFFu);
}

inline uint32_t bits_apply(uint32_t bits, const F2Mat& m) {
  uint32_t out = 0;
  for (int r = 0; r < 24; ++r)
    if ((bits >> r) & 1) out ^= row_bits24(m, r);
  return out;
}

inline long q_of_class(uint32_t bits) {
  return form_q(StdLattice::instance().from_class_bits(bits));
}

inline long b_of_classes(uint32_t u, uint32_t w) {
  return form_b(StdLattice::instance().from_class_bits(u),
                StdLattice::instance().from_class_bits(w));
}

inline int type_of_class(uint32_t bits) {
  return class_type(StdLattice::instance().from_class_bits(bits));
}

// Frames memoized per class; construction succeeds exactly for type-4
// classes, so a cache hit doubles as a type certificate.
inline const Frame& frame_of_class(uint32_t bits) {
  static std::map<uint32_t, Frame> memo;
  auto it = memo.find(bits);
  if (it == memo.end())
    it = memo.emplace(bits,
                      cross_frame(StdLattice::instance().from_class_bits(bits)))
             .first;
  return it->second;
}

inline char pure22_class(uint32_t u, uint32_t w) {
  if (b_of_classes(u, w) != 0) throw Error("pure22_class: B(u,w) != 0");
  if (type_of_class(u) != 4 || type_of_class(w) != 4 ||
      type_of_class(u ^ w) != 4)
    throw Error("pure22_class: class type != 4");
  Profile p = pair_profile_from(frame_of_class(u), frame_of_class(w));
  if (p == profile_a()) return 'a';
  if (p == profile_b()) return 'b';
  if (p == profile_c()) return 'c';
  throw Error("pure22_class: profile matches no reference");
}

// --- order-7 symmetry on the quotient ---

inline const F2Mat& sigma7_mod2() {
  static const F2Mat m = oct_gen_mod2(oct_gen("sigma7"));
  return m;
}

inline const C7Isotypic& leech_mod2_isotypic() {
  static const C7Isotypic iso = [] {
    C7Isotypic i = isotypic_c7(sigma7_mod2());
    if (i.fixed.rows() != 6 || i.a.rows() != 9 || i.b.rows() != 9)
      throw Error("unexpected isotypic dimensions");
    return i;
  }();
  return iso;
}

// --- the 73 invariant 3-spaces of a free isotypic component ---

struct CrossSpace {
  std::array<uint32_t, 3> rows;     // canonical reduced basis, ascending
  std::array<uint32_t, 7> classes;  // nonzero classes, ascending
  bool operator<(const CrossSpace& o) const { return classes < o.classes; }
  bool operator==(const CrossSpace& o) const { return classes == o.classes; }
};

// Rank of a set of classes, plus the canonical reduced span basis.
inline int class_span_rank(const std::vector<uint32_t>& vecs,
                           std::vector<uint32_t>* basis_out = nullptr) {
  std::vector<uint32_t> basis;
  for (uint32_t x : vecs) {
    for (uint32_t b : basis) x = std::min(x, x ^ b);
    if (!x) continue;
    for (uint32_t& b : basis) b = std::min(b, b ^ x);
    basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  if (basis_out) *basis_out = basis;
  return basis.size();
}

inline CrossSpace space_from_seed(uint32_t seed, const F2Mat& sigma) {
  uint32_t a = seed, b = bits_apply(a, sigma), c = bits_apply(b, sigma);
  std::set<uint32_t> cls;
  for (uint32_t m = 1; m < 8; ++m)
    cls.insert((m & 1 ? a : 0) ^ (m & 2 ? b : 0) ^ (m & 4 ? c : 0));
  if (cls.size() != 7 || cls.count(0))
    throw Error("seed orbit is not 3-dimensional");
  CrossSpace s;
  int k = 0;
  for (uint32_t x : cls) s.classes[k++] = x;
  std::vector<uint32_t> basis;
  if (class_span_rank({s.classes.begin(), s.classes.end()}, &basis) != 3)
    throw Error("span rank != 3");
  s.rows = {basis[0], basis[1], basis[2]};
  for (uint32_t x : s.classes)
    if (!cls.count(bits_apply(x, sigma)))
      throw Error("space not closed under the symmetry");
  return s;
}

// All 3-spaces of one free isotypic component ('a' or 'b') invariant and
// irreducible under the order-7 symmetry: exactly 73, partitioning the 511
// nonzero classes of the component into orbits of length 7.
inline std::vector<CrossSpace> sigma7_cross_spaces(char comp) {
  const C7Isotypic& iso = leech_mod2_isotypic();
  const F2Mat& basis = comp == 'a' ? iso.a : iso.b;
  const F2Mat& sigma = sigma7_mod2();
  std::set<CrossSpace> out;
  for (uint32_t m = 1; m < 512; ++m) {
    uint32_t v = 0;
    for (int r = 0; r < 9; ++r)
      if ((m >> r) & 1) v ^= row_bits24(basis, r);
    out.insert(space_from_seed(v, sigma));
  }
  if (out.size() != 73) throw Error("component does not split into 73 spaces");
  return {out.begin(), out.end()};
}

// Restriction of the symmetry to a space must satisfy the declared cubic:
// x^3+x+1 on component 'a', x^3+x^2+1 on 'b'.
inline void check_space_cubic(const CrossSpace& s, char comp) {
  const F2Mat& sigma = sigma7_mod2();
  F2Mat b(3, 24), img(3, 24);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 24; ++c) {
      b.set(r, c, (s.rows[r] >> c) & 1);
      uint32_t ib = bits_apply(s.rows[r], sigma);
      img.set(r, c, (ib >> c) & 1);
    }
  F2Mat R(3, 3);
  for (int r = 0; r < 3; ++r) {
    auto [ok, x] = b.solve_left(img.row(r));
    if (!ok) throw Error("space basis not invariant");
    for (int c = 0; c < 3; ++c)
      if (x[c]) R.set(r, c, true);
  }
  uint32_t poly = comp == 'a' ? 0b1011u : 0b1101u;
  F2Mat z = f2poly_eval(poly, R);
  if (z != F2Mat(3, 3)) throw Error("restriction has the wrong cubic");
}

// Case signature: multiset of pure 2x2 classifications over the seven
// 2-dimensional subspaces.  Each subspace is classified from all three of
// its generating pairs, which must agree.
inline std::string cross_space_signature(const CrossSpace& s) {
  std::set<std::array<uint32_t, 3>> subs;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      std::array<uint32_t, 3> t{s.classes[i], s.classes[j],
                                s.classes[i] ^ s.classes[j]};
      std::sort(t.begin(), t.end());
      subs.insert(t);
    }
  if (subs.size() != 7) throw Error("expected seven 2-subspaces");
  std::map<char, int> hist;
  for (const auto& t : subs) {
    char k1 = pure22_class(t[0], t[1]);
    char k2 = pure22_class(t[0], t[2]);
    char k3 = pure22_class(t[1], t[2]);
    if (k1 != k2 || k2 != k3)
      throw Error("2-subspace classification depends on the pair");
    hist[k1] += 1;
  }
  std::string sig;
  for (auto [k, n] : hist) {
    sig += k;
    sig += std::to_string(n);
  }
  return sig;
}

// Orbit partition of the spaces under mod-2 matrices commuting with the
// symmetry (they permute the spaces of each component).
inline std::vector<std::vector<int>> space_orbits(
    const std::vector<CrossSpace>& spaces, const std::vector<F2Mat>& gens) {
  std::map<std::array<uint32_t, 7>, int> index;
  for (size_t i = 0; i < spaces.size(); ++i) index[spaces[i].classes] = i;
  std::vector<int> orbit_of(spaces.size(), -1);
  std::vector<std::vector<int>> orbits;
  for (size_t s = 0; s < spaces.size(); ++s) {
    if (orbit_of[s] >= 0) continue;
    std::vector<int> orb{int(s)};
    orbit_of[s] = orbits.size();
    for (size_t head = 0; head < orb.size(); ++head)
      for (const auto& g : gens) {
        std::array<uint32_t, 7> img;
        for (int k = 0; k < 7; ++k)
          img[k] = bits_apply(spaces[orb[head]].classes[k], g);
        std::sort(img.begin(), img.end());
        auto it = index.find(img);
        if (it == index.end())
          throw Error("generator does not permute the spaces");
        if (orbit_of[it->second] < 0) {
          orbit_of[it->second] = orbits.size();
          orb.push_back(it->second);
        }
      }
    orbits.push_back(orb);
  }
  return orbits;
}

// --- abstract model: the projective plane of order 8 ---
//
// Points of PG(2,8) are the 73 eta-lines of F8^3; the subfield group L3(2)
// acts through 3x3 F2 matrices applied to the F8 coordinates.

struct PG28 {
  using Point = std::array<F8, 3>;
  using Mat3 = std::array<std::array<int, 3>, 3>;  // entries 0/1

  std::vector<Point> points;  // normalized: first nonzero coordinate is 1

  PG28() {
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b)
        for (int c = 0; c < 8; ++c) {
          Point p{F8(uint8_t(a)), F8(uint8_t(b)), F8(uint8_t(c))};
          if (p == Point{F8(0), F8(0), F8(0)}) continue;
          if (normalize(p) == p) points.push_back(p);
        }
    if (points.size() != 73) throw Error("PG(2,8) point count != 73");
  }

  static Point normalize(Point p) {
    for (int i = 0; i < 3; ++i)
      if (!p[i].is_zero()) {
        F8 inv = p[i].inv();
        for (int j = 0; j < 3; ++j) p[j] = p[j] * inv;
        return p;
      }
    throw Error("normalize: zero point");
  }

  static Point act(const Point& p, const Mat3& g) {
    Point q{F8(0), F8(0), F8(0)};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (g[i][j]) q[j] = q[j] + p[i];
    return normalize(q);
  }

  int index_of(const Point& p) const {
    auto it = std::find(points.begin(), points.end(), p);
    if (it == points.end()) throw Error("point not found");
    return it - points.begin();
  }

  // The subfield group: all invertible 3x3 F2 matrices, built by closure
  // from a Singer-type cycle and a transvection; order must be 168.
  static const std::vector<Mat3>& l32() {
    static const std::vector<Mat3> g = [] {
      Mat3 a{{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}};
      Mat3 b{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
      std::set<Mat3> seen{a, b};
      std::vector<Mat3> queue{a, b};
      auto mul = [](const Mat3& x, const Mat3& y) {
        Mat3 r{};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            int s = 0;
            for (int k = 0; k < 3; ++k) s ^= x[i][k] & y[k][j];
            r[i][j] = s;
          }
        return r;
      };
      for (size_t h = 0; h < queue.size(); ++h)
        for (const Mat3& m : {mul(queue[h], a), mul(queue[h], b)})
          if (seen.insert(m).second) queue.push_back(m);
      if (queue.size() != 168) throw Error("subfield group order != 168");
      return std::vector<Mat3>(queue.begin(), queue.end());
    }();
    return g;
  }

  std::vector<std::vector<int>> orbits() const {
    Mat3 a{{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}};
    Mat3 b{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
    std::vector<int> orbit_of(points.size(), -1);
    std::vector<std::vector<int>> out;
    for (size_t s = 0; s < points.size(); ++s) {
      if (orbit_of[s] >= 0) continue;
      std::vector<int> orb{int(s)};
      orbit_of[s] = out.size();
      for (size_t head = 0; head < orb.size(); ++head)
        for (const Mat3& g : {a, b}) {
          int img = index_of(act(points[orb[head]], g));
          if (orbit_of[img] < 0) {
            orbit_of[img] = out.size();
            orb.push_back(img);
          }
        }
      out.push_back(orb);
    }
    return out;
  }

  struct StabInfo {
    int order;
    bool abelian;
    int exponent;
    int derived_order;
  };

  StabInfo stabilizer_info(int point_index) const {
    const Point& p = points[point_index];
    std::vector<Mat3> stab;
    for (const Mat3& g : l32())
      if (act(p, g) == p) stab.push_back(g);
    StabInfo info{};
    info.order = stab.size();
    auto mul = [](const Mat3& x, const Mat3& y) {
      Mat3 r{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          int s = 0;
          for (int k = 0; k < 3; ++k) s ^= x[i][k] & y[k][j];
          r[i][j] = s;
        }
      return r;
    };
    Mat3 id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    info.abelian = true;
    for (const Mat3& x : stab)
      for (const Mat3& y : stab)
        if (mul(x, y) != mul(y, x)) info.abelian = false;
    info.exponent = 1;
    for (const Mat3& x : stab) {
      int o = 1;
      Mat3 pw = x;
      while (pw != id) {
        pw = mul(pw, x);
        ++o;
      }
      info.exponent = std::lcm(info.exponent, o);
    }
    // derived subgroup by closure over commutators
    std::set<Mat3> der{id};
    std::vector<Mat3> queue{id};
    std::vector<Mat3> comms;
    auto inv_of = [&](const Mat3& x) {
      Mat3 pw = x, prev = id;
      while (pw != id) {
        prev = pw;
        pw = mul(pw, x);
      }
      return prev;
    };
    for (const Mat3& x : stab)
      for (const Mat3& y : stab)
        comms.push_back(mul(mul(inv_of(x), inv_of(y)), mul(x, y)));
    for (const Mat3& c : comms)
      if (der.insert(c).second) queue.push_back(c);
    for (size_t h = 0; h < queue.size(); ++h)
      for (const Mat3& c : comms) {
        Mat3 m = mul(queue[h], c);
        if (der.insert(m).second) queue.push_back(m);
      }
    info.derived_order = der.size();
    return info;
  }
};

}  // namespace szv
