#pragma once

#include <utility>
#include <vector>

#include "szv/leech_oct.hpp"

namespace szv {

// Named member vectors used as calibration anchors and classifier inputs.

inline Octonion oct_of(std::initializer_list<std::pair<long, int>> terms) {
  Octonion x = Octonion::scalar(Dyadic(0));
  for (const auto& [c, t] : terms) {
    int k = t < 0 ? 0 : 1 + t;
    x[k] = x[k] + Dyadic(c);
  }
  return x;
}

inline Octonion oct_w() {
  return oct_of({{-2, -1}, {-1, 0}, {1, 3}, {1, 5}, {1, 6}});
}

struct Sample {
  std::string name;
  OctTriple v;
};

inline const std::vector<Sample>& calibration_vectors() {
  static const std::vector<Sample> vs = [] {
    Octonion z = Octonion::scalar(Dyadic(0));
    Octonion w = oct_w();
    Octonion u = oct_of({{1, -1}, {1, 0}});  // 1 + i0
    Octonion s = Octonion::s();
    std::vector<Sample> out;
    out.push_back({"ex1", {oct_of({{-2, -1}, {2, 0}, {2, 1}, {2, 3}}), z, z}});
    out.push_back({"four", {oct_of({{4, -1}}), z, z}});
    out.push_back({"d1", {w, w, z}});
    out.push_back({"exb_plus",
                   {Octonion::sbar().mul_pow2(1), oct_of({{2, -1}}),
                    oct_of({{2, -1}})}});
    out.push_back({"exb_minus",
                   {Octonion::sbar().mul_pow2(1), oct_of({{2, -1}}),
                    oct_of({{-2, -1}})}});
    out.push_back({"v1",
                   {w, oct_of({{1, 0}, {1, 3}, {2, 4}, {-1, 5}, {1, 6}}), z}});
    out.push_back({"exa", {oct_of({{2, -1}, {2, 0}, {2, 1}, {2, 3}}), z, z}});
    out.push_back({"exc",
                   {u * (s + oct_of({{-2, -1}})), u * s, u * s}});
    out.push_back({"v2",
                   {oct_of({{-2, -1}, {1, 0}, {-1, 1}, {1, 4}, {1, 6}}),
                    oct_of({{1, 0}, {1, 1}, {1, 4}, {2, 5}, {-1, 6}}), z}});
    out.push_back({"zz4", {z, z, oct_of({{4, -1}})}});
    out.push_back({"f2",
                   {oct_of({{-1, 0}, {1, 2}, {1, 3}, {-1, 6}}),
                    oct_of({{-1, -1}, {-1, 0}, {-1, 2}, {-1, 4}}),
                    oct_of({{2, -1}, {-1, 1}, {-1, 2}, {1, 3}, {1, 4}})}});
    return out;
  }();
  return vs;
}

inline const Sample& calibration_vector(const std::string& name) {
  for (const auto& s : calibration_vectors())
    if (s.name == name) return s;
  throw Error("unknown sample " + name);
}

struct PairFixture {
  std::string name;
  Vec24 first, second;
  char expect;
};

// Six pair fixtures for the frame-profile classifier: three built in
// standard coordinates, three from octonionic samples, expected classes
// (a),(b),(c),(a),(b),(c).
inline std::vector<PairFixture> pair_fixtures() {
  std::vector<PairFixture> out;
  Vec24 c1{};
  c1[0] = 8;
  {
    Vec24 p{};
    for (int k = 0; k < 4; ++k) p[k] = 4;
    out.push_back({"std_a", c1, p, 'a'});
  }
  {
    Vec24 p{};
    for (int k = 0; k < 8; ++k) p[k] = 2;  // block 0 is an octad
    p[8] = p[9] = 4;
    out.push_back({"std_b", c1, p, 'b'});
  }
  {
    uint32_t dod = 0;
    for (uint32_t d : Golay::instance().dodecads())
      if (d & 1) {
        dod = d;
        break;
      }
    Vec24 p{};
    int last = -1, first_out = -1;
    for (int k = 0; k < 24; ++k) {
      if ((dod >> k) & 1) {
        p[k] = 2;
        last = k;
      } else if (first_out < 0) {
        first_out = k;
      }
    }
    p[last] = -2;
    p[first_out] = 4;
    out.push_back({"std_c", c1, p, 'c'});
  }
  Vec24 o1 = oct_image(calibration_vector("four").v);
  out.push_back({"oct_a", o1, oct_image(calibration_vector("exa").v), 'a'});
  out.push_back({"oct_b", o1, oct_image(calibration_vector("exb_plus").v), 'b'});
  out.push_back({"oct_c", o1, oct_image(calibration_vector("exc").v), 'c'});
  return out;
}

}  // namespace szv
