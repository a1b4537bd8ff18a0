#pragma once
// Exhaustive subgroup searches: Frobenius 2^3:7 pairs, Suzuki-shaped
// 64-groups above them, pure elementary subgroups with a constrained
// involution supply, and small Sylow/census utilities.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "szv/perm.hpp"

namespace szv {

inline std::vector<int> perm_images(const Perm& p) {
  std::vector<int> v(p.degree());
  for (int i = 0; i < p.degree(); ++i) v[i] = p[i];
  return v;
}

inline std::vector<std::vector<int>> subgroup_key(const std::vector<Perm>& els) {
  std::vector<std::vector<int>> k;
  for (const Perm& p : els) k.push_back(perm_images(p));
  std::sort(k.begin(), k.end());
  return k;
}

// Closure of a set of permutations under multiplication (small subgroups
// only; throws past the cap).
inline std::vector<Perm> element_closure(const std::vector<Perm>& gens,
                                         int degree, size_t cap = 20000) {
  std::set<std::vector<int>> seen{perm_images(Perm(degree))};
  std::vector<Perm> out{Perm(degree)};
  for (size_t i = 0; i < out.size(); ++i)
    for (const Perm& h : gens) {
      Perm p = out[i] * h;
      if (seen.insert(perm_images(p)).second) {
        if (out.size() >= cap) throw Error("element closure exceeded cap");
        out.push_back(p);
      }
    }
  return out;
}

// A Frobenius 2^3:7 pair: an elementary-abelian eight-group and an order-7
// element cycling its seven involutions.
struct Frob56 {
  std::vector<Perm> ecube;  // all eight elements, identity first
  Perm x;
};

// Every Frobenius pair is found: the order-7 action on the seven involutions
// of E has a single orbit (orbit sizes 1 and 7 cannot mix in a set of 7), so
// {e, e^x, e^{x^2}} is an F2-basis of E for EVERY involution e of E, and a
// scan over all (order-7 element, involution) pairs covers every (E, x).
// Dedup is by the element set of E; one witness x is kept per E.
inline std::vector<Frob56> frobenius56_search(const PermGroup& g) {
  std::vector<Perm> sevens, invols;
  g.for_each_element([&](const Perm& p) {
    uint64_t o = p.order();
    if (o == 7) sevens.push_back(p);
    else if (o == 2) invols.push_back(p);
    return true;
  });
  // one representative generator per order-7 cyclic subgroup: the same pairs
  // (E, <x>) are found with a sixth of the scan
  {
    std::set<std::vector<int>> keep;
    std::vector<Perm> reps;
    for (const Perm& x : sevens) {
      std::vector<int> best = perm_images(x);
      Perm p = x;
      for (int k = 2; k <= 6; ++k) {
        p = p * x;
        best = std::min(best, perm_images(p));
      }
      if (keep.insert(best).second) reps.push_back(Perm(best));
    }
    sevens = std::move(reps);
  }
  std::vector<Frob56> out;
  std::set<std::vector<std::vector<int>>> seen;
  Perm id(g.degree());
  for (const Perm& x : sevens) {
    Perm xi = x.inverse();
    auto cj = [&](const Perm& p) { return xi * (p * x); };
    for (const Perm& e : invols) {
      Perm f2 = cj(e);
      if (f2 == e) continue;  // x centralizes e: no free action
      Perm ef2 = e * f2;
      if (!(ef2 == f2 * e)) continue;
      Perm f3 = cj(f2);
      if (!(e * f3 == f3 * e) || !(f2 * f3 == f3 * f2)) continue;
      std::vector<Perm> E{id,      e,      f2,      f3,
                          ef2,     e * f3, f2 * f3, ef2 * f3};
      std::set<std::vector<int>> eset;
      bool indep = true;
      for (const Perm& p : E)
        if (!eset.insert(perm_images(p)).second) {
          indep = false;
          break;
        }
      if (!indep) continue;  // {e, e^x, e^{x^2}} has rank < 3
      if (!eset.count(perm_images(cj(f3)))) continue;  // E not x-invariant
      std::vector<std::vector<int>> key(eset.begin(), eset.end());
      if (seen.insert(key).second) out.push_back({E, x});
    }
  }
  return out;
}

// Shape test for the 64-element Suzuki 2-group: centre = derived subgroup =
// Frattini subgroup = the given eight-group, exponent 4.
inline bool suzuki_shape(const std::vector<Perm>& P,
                         const std::set<std::vector<int>>& centre_key) {
  if (P.size() != 64) return false;
  int deg = P[0].degree();
  std::set<std::vector<int>> z;
  for (const Perm& a : P) {
    bool central = true;
    for (const Perm& b : P)
      if (!(a * b == b * a)) {
        central = false;
        break;
      }
    if (central) z.insert(perm_images(a));
  }
  if (z != centre_key) return false;
  bool has4 = false;
  std::vector<Perm> comms, squares;
  for (const Perm& a : P) {
    uint64_t o = a.order();
    if (o == 3 || o > 4) return false;
    if (o == 4) has4 = true;
    squares.push_back(a * a);
  }
  if (!has4) return false;
  for (const Perm& a : P)
    for (const Perm& b : P)
      comms.push_back(a.inverse() * (b.inverse() * (a * b)));
  auto as_key = [](const std::vector<Perm>& v) {
    std::set<std::vector<int>> s;
    for (const Perm& p : v) s.insert(perm_images(p));
    return s;
  };
  std::set<std::vector<int>> derived = as_key(element_closure(comms, deg, 128));
  if (derived != centre_key) return false;
  for (const Perm& s : squares) comms.push_back(s);
  std::set<std::vector<int>> frattini =
      as_key(element_closure(comms, deg, 128));
  return frattini == centre_key;
}

struct BSearch {
  long candidates = 0;  // cosets yE examined
  long found = 0;       // Suzuki-shaped x-invariant 64-groups with centre E
};

// Any Suzuki-shaped B with centre E normalized by x lies inside C_G(E), and
// x acts freely on the eight-group B/E (same single-orbit argument), so
// B = <E, y, y^x, y^{x^2}> for EVERY y in B \ E.  Scanning y over C_G(E)
// with y^2 in E is therefore exhaustive.
inline BSearch b_subgroup_search(const PermGroup& g, const Frob56& fx,
                                 size_t enum_limit = 200000) {
  if (g.order() > static_cast<long>(enum_limit))
    throw Error("group too large for the B search");
  std::set<std::vector<int>> eset;
  for (const Perm& e : fx.ecube) eset.insert(perm_images(e));
  std::vector<Perm> cent;
  g.for_each_element([&](const Perm& c) {
    for (const Perm& e : fx.ecube)
      if (!(c * e == e * c)) return true;
    cent.push_back(c);
    return true;
  });
  BSearch res;
  Perm xi = fx.x.inverse();
  auto cj = [&](const Perm& p) { return xi * (p * fx.x); };
  std::set<std::vector<std::vector<int>>> seen;
  for (const Perm& y : cent) {
    if (eset.count(perm_images(y))) continue;
    if (!eset.count(perm_images(y * y))) continue;
    ++res.candidates;
    Perm y2 = cj(y), y3 = cj(y2);
    std::vector<Perm> gens = fx.ecube;
    gens.push_back(y);
    gens.push_back(y2);
    gens.push_back(y3);
    std::vector<Perm> P = element_closure(gens, g.degree(), 129);
    if (P.size() != 64) continue;
    std::set<std::vector<int>> pset;
    for (const Perm& p : P) pset.insert(perm_images(p));
    if (!pset.count(perm_images(cj(y3)))) continue;  // not x-invariant
    if (!suzuki_shape(P, eset)) continue;
    std::vector<std::vector<int>> key(pset.begin(), pset.end());
    if (seen.insert(key).second) ++res.found;
  }
  return res;
}

struct PureCube {
  long allowed = 0;
  long pure22 = 0;
  long pure23 = 0;
};

// Count elementary four- and eight-subgroups all of whose involutions lie in
// the allowed set.  Exhaustive: a pure 2^2 is generated by any two of its
// involutions, and a pure 2^3 extends one of its (pure) 2^2 subgroups by any
// involution outside it.
inline PureCube pure_2cubed_check(
    const PermGroup& g, const std::function<bool(const Perm&)>& allowed) {
  std::vector<Perm> A;
  g.for_each_element([&](const Perm& p) {
    if (p.order() == 2 && allowed(p)) A.push_back(p);
    return true;
  });
  PureCube res;
  res.allowed = static_cast<long>(A.size());
  std::set<std::vector<int>> aset;
  for (const Perm& a : A) aset.insert(perm_images(a));
  std::set<std::vector<std::vector<int>>> v4, e8;
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = i + 1; j < A.size(); ++j) {
      Perm ab = A[i] * A[j];
      if (!(ab == A[j] * A[i])) continue;
      if (!aset.count(perm_images(ab))) continue;
      v4.insert(subgroup_key({A[i], A[j], ab}));
    }
  res.pure22 = static_cast<long>(v4.size());
  for (const auto& k : v4) {
    Perm a(k[0]), b(k[1]);
    for (const Perm& c : A) {
      std::vector<int> ci = perm_images(c);
      if (ci == k[0] || ci == k[1] || ci == k[2]) continue;
      if (!(a * c == c * a) || !(b * c == c * b)) continue;
      Perm ac = a * c, bc = b * c, abc = (a * b) * c;
      if (!aset.count(perm_images(ac)) || !aset.count(perm_images(bc)) ||
          !aset.count(perm_images(abc)))
        continue;
      e8.insert(subgroup_key({a, b, a * b, c, ac, bc, abc}));
    }
  }
  res.pure23 = static_cast<long>(e8.size());
  return res;
}

// The normal Sylow 2-subgroup of a small group: all elements of 2-power
// order, certified multiplicatively closed and of full 2-part size.
inline std::vector<Perm> normal_sylow2(const PermGroup& g,
                                       size_t limit = 100000) {
  if (g.order() > static_cast<long>(limit))
    throw Error("group too large to enumerate");
  std::vector<Perm> out;
  g.for_each_element([&](const Perm& p) {
    uint64_t o = p.order();
    if ((o & (o - 1)) == 0) out.push_back(p);
    return true;
  });
  std::set<std::vector<int>> s;
  for (const Perm& p : out) s.insert(perm_images(p));
  for (const Perm& a : out)
    for (const Perm& b : out)
      if (!s.count(perm_images(a * b)))
        throw Error("2-power elements not closed: Sylow 2-subgroup not normal");
  mpz_class two = 1, o = g.order();
  while (o % 2 == 0) {
    two *= 2;
    o /= 2;
  }
  if (two != static_cast<long>(out.size()))
    throw Error("2-part size mismatch in Sylow computation");
  return out;
}

// Census of involutions by cycle type.
inline std::map<std::vector<int>, long> involution_census(const PermGroup& g) {
  std::map<std::vector<int>, long> out;
  g.for_each_element([&](const Perm& p) {
    if (p.order() == 2) ++out[p.cycle_type()];
    return true;
  });
  return out;
}

// Deterministic sampled census of element orders for groups too large to
// enumerate: order -> count over uniform random elements.
inline std::map<uint64_t, long> sampled_order_census(const PermGroup& g,
                                                     int samples,
                                                     uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<uint64_t, long> out;
  for (int i = 0; i < samples; ++i) ++out[g.random_element(rng).order()];
  return out;
}

}  // namespace szv
