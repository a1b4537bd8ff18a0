#ifndef SZV_PERM_HPP
#define SZV_PERM_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "szv/dyadic.hpp"

namespace szv {

// Permutation on 0..n-1, stored as image vector.  Products act left to
// right: (p*q) maps x to q[p[x]].
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
  explicit Perm(std::vector<int> img) : img_(std::move(img)) {}

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int x = 0; x < degree(); ++x)
      if (img_[x] != x) return false;
    return true;
  }

  Perm operator*(const Perm& o) const {
    std::vector<int> r(img_.size());
    for (size_t x = 0; x < img_.size(); ++x) r[x] = o.img_[img_[x]];
    return Perm(std::move(r));
  }
  Perm inverse() const {
    std::vector<int> r(img_.size());
    for (size_t x = 0; x < img_.size(); ++x) r[img_[x]] = static_cast<int>(x);
    return Perm(std::move(r));
  }
  Perm conj_by(const Perm& g) const {  // g^-1 * this * g
    return g.inverse() * (*this * g);
  }
  Perm power(long e) const {
    if (e < 0) return inverse().power(-e);
    Perm r(degree()), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::vector<int> cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lens;
    for (int x = 0; x < degree(); ++x) {
      if (seen[x]) continue;
      int len = 0, y = x;
      while (!seen[y]) {
        seen[y] = true;
        y = img_[y];
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
  }

  uint64_t order() const {
    uint64_t o = 1;
    for (int len : cycle_type()) o = std::lcm(o, uint64_t(len));
    return o;
  }

  int fixed_points() const {
    int c = 0;
    for (int x = 0; x < degree(); ++x)
      if (img_[x] == x) ++c;
    return c;
  }

  // One line of 1-based images, space separated.
  std::string str() const {
    std::ostringstream os;
    for (int x = 0; x < degree(); ++x) {
      if (x) os << ' ';
      os << img_[x] + 1;
    }
    return os.str();
  }
  static Perm parse(const std::string& line, int degree) {
    std::istringstream is(line);
    std::vector<int> img;
    long v;
    while (is >> v) {
      if (v < 1 || v > degree) throw Error("permutation image out of range");
      img.push_back(static_cast<int>(v - 1));
    }
    if (static_cast<int>(img.size()) != degree)
      throw Error("permutation line has wrong length");
    std::vector<bool> hit(degree, false);
    for (int x : img) {
      if (hit[x]) throw Error("permutation line is not a bijection");
      hit[x] = true;
    }
    return Perm(std::move(img));
  }

 private:
  std::vector<int> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Orbit of a point with a Schreier tree (parent point + generator used).
struct Orbit {
  std::vector<int> points;    // discovery order, points[0] = root
  std::vector<int> index_of;  // degree-sized, -1 = not in orbit
  std::vector<int> parent;
  std::vector<int> via_gen;
};

inline Orbit orbit_of(int start, const std::vector<Perm>& gens, int degree) {
  Orbit o;
  o.index_of.assign(degree, -1);
  o.parent.assign(degree, -1);
  o.via_gen.assign(degree, -1);
  o.points.push_back(start);
  o.index_of[start] = 0;
  for (size_t qi = 0; qi < o.points.size(); ++qi) {
    int x = o.points[qi];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = gens[gi][x];
      if (o.index_of[y] < 0) {
        o.index_of[y] = static_cast<int>(o.points.size());
        o.points.push_back(y);
        o.parent[y] = x;
        o.via_gen[y] = static_cast<int>(gi);
      }
    }
  }
  return o;
}

// Element of <gens> mapping the orbit root to x, composed along the tree.
inline Perm transversal_element(const Orbit& o, const std::vector<Perm>& gens,
                                int degree, int x) {
  std::vector<int> path;
  int y = x;
  while (o.parent[y] >= 0) {
    path.push_back(o.via_gen[y]);
    y = o.parent[y];
  }
  Perm t(degree);
  for (auto it = path.rbegin(); it != path.rend(); ++it) t = t * gens[*it];
  return t;
}

inline std::vector<std::vector<int>> orbit_partition(
    const std::vector<Perm>& gens, int degree) {
  std::vector<bool> seen(degree, false);
  std::vector<std::vector<int>> parts;
  for (int x = 0; x < degree; ++x) {
    if (seen[x]) continue;
    Orbit o = orbit_of(x, gens, degree);
    std::vector<int> pts = o.points;
    std::sort(pts.begin(), pts.end());
    for (int y : pts) seen[y] = true;
    parts.push_back(std::move(pts));
  }
  return parts;
}

// Deterministic Schreier-Sims with on-demand transversal elements.
class PermGroup {
 public:
  PermGroup() : degree_(0) {}
  PermGroup(std::vector<Perm> gens, int degree)
      : degree_(degree), gens_(std::move(gens)) {
    for (const Perm& g : gens_)
      if (g.degree() != degree_) throw Error("generator degree mismatch");
    build();
  }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<int>& base() const { return base_; }

  mpz_class order() const {
    mpz_class o = 1;
    for (const auto& ob : orb_) o *= static_cast<long>(ob.points.size());
    return o;
  }
  uint64_t order_u64() const {
    mpz_class o = order();
    if (!o.fits_ulong_p()) throw Error("group order exceeds 64 bits");
    return o.get_ui();
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    auto [r, lev] = strip(g, 0);
    return lev == static_cast<int>(base_.size()) && r.is_identity();
  }

  // Enumerate all elements once each; visitor returns false to abort early.
  void for_each_element(const std::function<bool(const Perm&)>& visit) const {
    std::vector<std::vector<Perm>> tv(base_.size());
    for (size_t l = 0; l < base_.size(); ++l)
      for (int p : orb_[l].points)
        tv[l].push_back(transversal_element(orb_[l], S_[l], degree_, p));
    Perm id(degree_);
    rec_enum(0, id, tv, visit);
  }

  std::vector<Perm> elements() const {
    std::vector<Perm> out;
    for_each_element([&](const Perm& p) {
      out.push_back(p);
      return true;
    });
    return out;
  }

  std::vector<Perm> elements_of_order(uint64_t k) const {
    std::vector<Perm> out;
    for_each_element([&](const Perm& p) {
      if (p.order() == k) out.push_back(p);
      return true;
    });
    return out;
  }

  // Uniformly random element: an independent transversal pick per level is
  // the same bijective factorization the enumerator walks.
  Perm random_element(std::mt19937_64& rng) const {
    Perm r(degree_);
    for (size_t l = 0; l < base_.size(); ++l) {
      const std::vector<int>& pts = orb_[l].points;
      int p = pts[rng() % pts.size()];
      r = transversal_element(orb_[l], S_[l], degree_, p) * r;
    }
    return r;
  }

  PermGroup point_stabilizer(int point) const {
    Orbit o = orbit_of(point, gens_, degree_);
    std::vector<Perm> sg = schreier_generators(o, gens_);
    mpz_class target = order() / static_cast<long>(o.points.size());
    return accumulate_to_order(sg, target, degree_);
  }

  // Setwise stabilizer via the orbit of the set; certified by the
  // orbit-stabilizer count against this group's order.
  PermGroup setwise_stabilizer(const std::vector<int>& set) const {
    std::vector<int> base_set = set;
    std::sort(base_set.begin(), base_set.end());
    auto key_of = [&](const std::vector<int>& s) {
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
      std::sort(t.begin(), t.end());
      return t;
    };
    struct Node {
      std::vector<int> set;
      int parent;
      int via_gen;
    };
    std::vector<Node> nodes{{base_set, -1, -1}};
    std::unordered_map<std::string, int> index{{key_of(base_set), 0}};
    for (size_t qi = 0; qi < nodes.size(); ++qi)
      for (size_t gi = 0; gi < gens_.size(); ++gi) {
        auto img = apply(nodes[qi].set, gens_[gi]);
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
      Perm t(degree_);
      for (auto it = path.rbegin(); it != path.rend(); ++it)
        t = t * gens_[*it];
      return t;
    };
    mpz_class target = order() / static_cast<long>(nodes.size());
    std::vector<Perm> sg;
    PermGroup acc({}, degree_);
    for (size_t qi = 0; qi < nodes.size() && acc.order() < target; ++qi) {
      Perm t = trans(static_cast<int>(qi));
      for (size_t gi = 0; gi < gens_.size() && acc.order() < target; ++gi) {
        Perm cand = t * gens_[gi];
        int img = index.at(key_of(apply(base_set, cand)));
        Perm s = cand * trans(img).inverse();
        if (s.is_identity() || acc.contains(s)) continue;
        sg.push_back(s);
        acc = PermGroup(sg, degree_);
      }
    }
    if (acc.order() != target)
      throw Error("setwise stabilizer order mismatch");
    return acc;
  }

  bool is_subgroup_of(const PermGroup& big) const {
    for (const Perm& g : gens_)
      if (!big.contains(g)) return false;
    return true;
  }

 private:
  static PermGroup accumulate_to_order(const std::vector<Perm>& cands,
                                       const mpz_class& target, int degree) {
    std::vector<Perm> sel;
    PermGroup acc({}, degree);
    for (const Perm& c : cands) {
      if (acc.order() == target) break;
      if (c.is_identity() || acc.contains(c)) continue;
      sel.push_back(c);
      acc = PermGroup(sel, degree);
    }
    if (acc.order() != target) throw Error("stabilizer order mismatch");
    return acc;
  }

  std::vector<Perm> schreier_generators(const Orbit& o,
                                        const std::vector<Perm>& gens) const {
    std::vector<Perm> out;
    int root = o.points[0];
    for (int p : o.points) {
      Perm t = transversal_element(o, gens, degree_, p);
      for (const Perm& g : gens) {
        Perm cand = t * g;
        Perm s = cand *
                 transversal_element(o, gens, degree_, cand[root]).inverse();
        if (!s.is_identity()) out.push_back(s);
      }
    }
    return out;
  }

  void build() {
    base_.clear();
    S_.clear();
    orb_.clear();
    std::vector<Perm> start;
    for (const Perm& g : gens_)
      if (!g.is_identity()) start.push_back(g);
    if (start.empty()) return;
    S_.push_back(start);
    base_.push_back(first_moved(start));
    orb_.push_back(orbit_of(base_[0], S_[0], degree_));

    int i = 0;
    while (i >= 0) {
      bool added = process_level(i);
      if (!added) --i;
      else i = last_jump_;
    }
  }

  static int first_moved(const std::vector<Perm>& gens) {
    for (int x = 0;; ++x)
      for (const Perm& g : gens)
        if (g[x] != x) return x;
  }

  // Verify all Schreier generators of level i strip through deeper levels.
  // On failure, install the residue and record the level to resume from.
  bool process_level(int i) {
    const Orbit& o = orb_[i];
    for (int p : o.points) {
      Perm t = transversal_element(o, S_[i], degree_, p);
      for (const Perm& g : S_[i]) {
        Perm cand = t * g;
        Perm s =
            cand *
            transversal_element(o, S_[i], degree_, cand[base_[i]]).inverse();
        if (s.is_identity()) continue;
        auto [r, j] = strip(s, i + 1);
        if (r.is_identity() && j == static_cast<int>(base_.size())) continue;
        if (j == static_cast<int>(base_.size())) {
          // residue fixes the whole base: extend it
          int b = -1;
          for (int x = 0; x < degree_; ++x)
            if (r[x] != x) {
              b = x;
              break;
            }
          base_.push_back(b);
          S_.push_back({});
          orb_.push_back({});
        }
        for (int l = i + 1; l <= j; ++l) {
          S_[l].push_back(r);
          orb_[l] = orbit_of(base_[l], S_[l], degree_);
        }
        last_jump_ = j;
        return true;
      }
    }
    return false;
  }

  // Strip g through levels from..end; returns (residue, stuck level).
  // stuck level == base_.size() means it stripped through everything.
  std::pair<Perm, int> strip(const Perm& g, int from) const {
    Perm r = g;
    for (int l = from; l < static_cast<int>(base_.size()); ++l) {
      int img = r[base_[l]];
      if (orb_[l].index_of[img] < 0) return {r, l};
      Perm t = transversal_element(orb_[l], S_[l], degree_, img);
      r = r * t.inverse();
    }
    return {r, static_cast<int>(base_.size())};
  }

  bool rec_enum(size_t lev, const Perm& acc,
                const std::vector<std::vector<Perm>>& tv,
                const std::function<bool(const Perm&)>& visit) const {
    if (lev == base_.size()) return visit(acc);
    for (const Perm& t : tv[lev])
      if (!rec_enum(lev + 1, t * acc, tv, visit)) return false;
    return true;
  }

  int degree_;
  std::vector<Perm> gens_;
  std::vector<int> base_;
  std::vector<std::vector<Perm>> S_;
  std::vector<Orbit> orb_;
  int last_jump_ = 0;
};

}  // namespace szv

#endif
