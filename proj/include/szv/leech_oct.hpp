#pragma once

#include <functional>
#include <string>
#include <vector>

#include "szv/enumerate.hpp"
#include "szv/f2.hpp"
#include "szv/octonion.hpp"

namespace szv {

// Octonionic model of the lattice: triples (x, y, z) of dyadic octonions.
// The doubling map sends a triple to 24 standard coordinates (slot order
// x | y | z, basis 1, i0..i6 per slot) with the real coordinate of the
// middle slot negated and everything scaled by 2.  A triple is a member iff
// its image is a member of the standard-coordinate lattice.

using OctTriple = std::array<Octonion, 3>;

inline std::array<Dyadic, 24> dblC(const OctTriple& t) {
  std::array<Dyadic, 24> out;
  for (int b = 0; b < 3; ++b)
    for (int k = 0; k < 8; ++k) {
      Dyadic v = t[b][k];
      if (b == 1 && k == 0) v = -v;
      out[8 * b + k] = v.mul_pow2(1);
    }
  return out;
}

inline OctTriple invdblC(const Vec24& v) {
  OctTriple t;
  for (int b = 0; b < 3; ++b)
    for (int k = 0; k < 8; ++k) {
      Dyadic d = Dyadic(v[8 * b + k]).mul_pow2(-1);
      if (b == 1 && k == 0) d = -d;
      t[b][k] = d;
    }
  return t;
}

inline bool oct_member(const OctTriple& t, Vec24* image = nullptr) {
  auto d = dblC(t);
  Vec24 v;
  for (int k = 0; k < 24; ++k) {
    if (!d[k].is_integer()) return false;
    v[k] = d[k].to_long();
  }
  if (image) *image = v;
  return leech_member(v);
}

inline Vec24 oct_image(const OctTriple& t) {
  Vec24 v;
  if (!oct_member(t, &v)) throw Error("triple is not a member");
  return v;
}

// Total octonion norm N(x)+N(y)+N(z); members have integral norm and
// type = N/4 (the image in standard coordinates has norm 4N).
inline Dyadic oct_norm(const OctTriple& t) {
  return t[0].norm() + t[1].norm() + t[2].norm();
}

inline OctTriple oct_basis_row(int r) {
  return invdblC(StdLattice::instance().basis()[r]);
}

// --- transformations ---------------------------------------------------

using OctMat = std::array<std::array<Octonion, 3>, 3>;

// out_j = (1/2) conj^{omega_j}( sum_k conj^{tau_k}(v_k) * M[k][j] );
// tau/omega are slot bitmasks selecting which inputs/outputs are conjugated.
inline OctTriple twisted_apply(const OctTriple& v, const OctMat& M, int tau,
                               int omega) {
  OctTriple out;
  for (int j = 0; j < 3; ++j) {
    Octonion acc = Octonion::scalar(Dyadic(0));
    for (int k = 0; k < 3; ++k) {
      Octonion vk = (tau >> k) & 1 ? v[k].conj() : v[k];
      acc = acc + vk * M[k][j];
    }
    if ((omega >> j) & 1) acc = acc.conj();
    out[j] = acc.mul_pow2(-1);
  }
  return out;
}

// Same matrix action without the conjugation twists.
inline OctTriple plain_apply(const OctTriple& v, const OctMat& M) {
  return twisted_apply(v, M, 0, 0);
}

inline OctMat mat_g1() {
  Octonion z = Octonion::scalar(Dyadic(0));
  Octonion one = Octonion::scalar(Dyadic(1));
  Octonion mone = Octonion::scalar(Dyadic(-1));
  Octonion s = Octonion::s(), sb = Octonion::sbar();
  return OctMat{{{z, sb, sb}, {s, mone, one}, {s, one, mone}}};
}

inline OctMat mat_m2() {
  Octonion z = Octonion::scalar(Dyadic(0));
  Octonion one = Octonion::scalar(Dyadic(1));
  Octonion mone = Octonion::scalar(Dyadic(-1));
  Octonion s = Octonion::s(), sb = Octonion::sbar();
  return OctMat{{{mone, one, s}, {one, mone, s}, {sb, sb, z}}};
}

struct OctGen {
  std::string name;
  std::function<OctTriple(const OctTriple&)> apply;
};

inline Octonion rotate_units(const Octonion& x) {
  Octonion y = Octonion::scalar(x[0]);
  for (int t = 0; t < 7; ++t) y[1 + (t + 1) % 7] = x[1 + t];
  return y;
}

// Named lattice transformations: the unit-rotation symmetry, slot sign
// changes, the three transpositions and two 3-cycles of slots (with the
// conjugations forced by the middle-slot twist), and the two matrix
// generators with their conjugation masks.
inline const std::vector<OctGen>& oct_gens() {
  static const std::vector<OctGen> gens = [] {
    std::vector<OctGen> g;
    g.push_back({"sigma7", [](const OctTriple& v) {
                   return OctTriple{rotate_units(v[0]), rotate_units(v[1]),
                                    rotate_units(v[2])};
                 }});
    for (int b = 0; b < 3; ++b)
      g.push_back({"neg" + std::to_string(b), [b](const OctTriple& v) {
                     OctTriple w = v;
                     w[b] = -w[b];
                     return w;
                   }});
    g.push_back({"swap01", [](const OctTriple& v) {
                   return OctTriple{v[1].conj(), v[0].conj(), v[2]};
                 }});
    g.push_back({"swap02", [](const OctTriple& v) {
                   return OctTriple{v[2], v[1], v[0]};
                 }});
    g.push_back({"swap12", [](const OctTriple& v) {
                   return OctTriple{v[0], v[2].conj(), v[1].conj()};
                 }});
    g.push_back({"cycle012", [](const OctTriple& v) {
                   return OctTriple{v[1].conj(), v[2].conj(), v[0]};
                 }});
    g.push_back({"cycle021", [](const OctTriple& v) {
                   return OctTriple{v[2], v[0].conj(), v[1].conj()};
                 }});
    g.push_back({"g1", [](const OctTriple& v) {
                   return twisted_apply(v, mat_g1(), 5, 5);
                 }});
    g.push_back({"m2", [](const OctTriple& v) {
                   return twisted_apply(v, mat_m2(), 5, 5);
                 }});
    return g;
  }();
  return gens;
}

inline const OctGen& oct_gen(const std::string& name) {
  for (const auto& g : oct_gens())
    if (g.name == name) return g;
  throw Error("unknown generator " + name);
}

// Certifies the transform is a lattice automorphism: basis rows map to
// members and the coordinate matrix of the images is unimodular.
inline bool oct_preserves(const OctGen& g, std::string* why = nullptr) {
  std::vector<std::vector<mpz_class>> coords;
  for (int r = 0; r < 24; ++r) {
    OctTriple img = g.apply(oct_basis_row(r));
    Vec24 v;
    if (!oct_member(img, &v)) {
      if (why) *why = "image of basis row " + std::to_string(r) +
                      " is not a member";
      return false;
    }
    auto c = StdLattice::instance().coords(v);
    std::vector<mpz_class> row(24);
    for (int j = 0; j < 24; ++j) {
      if (c[j].get_den() != 1) {
        if (why) *why = "non-integral coordinates";
        return false;
      }
      row[j] = c[j].get_num();
    }
    coords.push_back(std::move(row));
  }
  mpz_class d = det_mpz(coords);
  if (d != 1 && d != -1) {
    if (why) *why = "image coordinate matrix not unimodular";
    return false;
  }
  return true;
}

// Mod-2 matrix of a lattice automorphism (row r = class of the image of
// basis row r).
inline F2Mat oct_gen_mod2(const OctGen& g) {
  F2Mat M(24, 24);
  for (int r = 0; r < 24; ++r) {
    uint32_t bits = StdLattice::instance().class_bits(oct_image(g.apply(oct_basis_row(r))));
    for (int j = 0; j < 24; ++j)
      if ((bits >> j) & 1) M.set(r, j, true);
  }
  return M;
}

}  // namespace szv
