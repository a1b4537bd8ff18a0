#include <catch2/catch_amalgamated.hpp>

#include "szv/golay.hpp"
#include "szv/perm.hpp"
#include "szv/sha256.hpp"

using namespace szv;

TEST_CASE("sha256 pinned vectors") {
  CHECK(Sha256::hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(Sha256::hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(Sha256::hex(std::string(1000000, 'a')) ==
        "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST_CASE("golay code structure") {
  const Golay& g = Golay::instance();
  CHECK(g.basis().size() == 12);
  CHECK(g.codewords().size() == 4096);
  CHECK(g.octads().size() == 759);
  CHECK(g.dodecads().size() == 2576);
  int w16 = 0;
  for (uint32_t w : g.codewords())
    if (__builtin_popcount(w) == 16) ++w16;
  CHECK(w16 == 759);
  CHECK(g.contains(0));
  CHECK(g.contains(0xFFFFFF));
  CHECK(g.contains(0xFF));
  CHECK(g.contains(0xFF << 8));
  CHECK(g.contains(0xFF << 16));
  CHECK_FALSE(g.contains(1));
  CHECK_FALSE(g.contains(0x0F));
  // invariance under the slot rotation i_t -> i_{t+1} in each block
  auto rot = [](uint32_t m) {
    uint32_t out = 0;
    for (int blk = 0; blk < 3; ++blk)
      for (int sl = 0; sl < 8; ++sl)
        if (m & (1u << (blk * 8 + sl))) {
          int nsl = sl == 0 ? 0 : 1 + (sl % 7);
          out |= 1u << (blk * 8 + nsl);
        }
    return out;
  };
  for (uint32_t b : g.basis()) CHECK(g.contains(rot(b)));
  // invariance under block permutations
  for (uint32_t b : g.basis()) {
    uint32_t m0 = b & 0xFFu, m1 = (b >> 8) & 0xFFu, m2 = (b >> 16) & 0xFFu;
    CHECK(g.contains(m1 | (m0 << 8) | (m2 << 16)));
    CHECK(g.contains(m2 | (m0 << 8) | (m1 << 16)));
  }
  CHECK(g.cocode_weight(0) == 0);
  CHECK(g.cocode_weight(1) == 1);
  CHECK(g.cocode_weight(0xFF) == 0);
  CHECK(g.cocode_weight(0x3) == 2);
}

TEST_CASE("leech membership standard scaling") {
  auto vec = [](std::vector<long> v) {
    std::array<long, 24> a{};
    for (size_t i = 0; i < v.size(); ++i) a[i] = v[i];
    return a;
  };
  CHECK(leech_member(vec({8})));
  CHECK(leech_member(vec({4, 4})));
  CHECK(leech_member(vec({4, -4})));
  CHECK_FALSE(leech_member(vec({4})));
  CHECK(leech_member(vec({2, 2, 2, 2, 2, 2, 2, 2})));
  CHECK_FALSE(leech_member(vec({-2, 2, 2, 2, 2, 2, 2, 2})));
  std::array<long, 24> m3{};
  for (int i = 0; i < 23; ++i) m3[i] = 1;
  m3[23] = -3;
  CHECK(leech_member(m3));
  std::array<long, 24> p3{};
  p3[0] = 3;
  for (int i = 1; i < 24; ++i) p3[i] = 1;
  CHECK_FALSE(leech_member(p3));
  std::array<long, 24> odd{};
  odd[0] = 1;
  CHECK_FALSE(leech_member(odd));
}

TEST_CASE("perm basics") {
  Perm p = Perm::parse("2 3 1 4 5", 5);
  CHECK(p.degree() == 5);
  CHECK(p[0] == 1);
  CHECK(p.str() == "2 3 1 4 5");
  CHECK(p.order() == 3);
  CHECK(p.cycle_type() == std::vector<int>({1, 1, 3}));
  CHECK(p.fixed_points() == 2);
  Perm q = Perm::parse("1 2 3 5 4", 5);
  CHECK((p * q).order() == 6);
  CHECK((p * q)[3] == 4);
  CHECK((p * p * p).is_identity());
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.power(3).is_identity());
  CHECK(p.power(-1) == p.inverse());
  CHECK_THROWS_AS(Perm::parse("1 1 2", 3), Error);
  CHECK_THROWS_AS(Perm::parse("1 2", 3), Error);
  CHECK_THROWS_AS(Perm::parse("1 2 4", 3), Error);
}

namespace {
Perm cycle(int n, std::vector<int> c) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  return Perm(img);
}
}  // namespace

TEST_CASE("orbits and schreier sims") {
  // S5 = <(01), (01234)>
  std::vector<Perm> s5 = {cycle(5, {0, 1}), cycle(5, {0, 1, 2, 3, 4})};
  PermGroup G(s5, 5);
  CHECK(G.order() == 120);
  CHECK(G.contains(cycle(5, {2, 4})));
  CHECK_FALSE(G.contains(Perm(4)));

  // A5
  std::vector<Perm> a5 = {cycle(5, {0, 1, 2}), cycle(5, {0, 1, 2, 3, 4})};
  PermGroup A(a5, 5);
  CHECK(A.order() == 60);
  CHECK_FALSE(A.contains(cycle(5, {0, 1})));
  CHECK(A.elements().size() == 60);
  CHECK(A.elements_of_order(5).size() == 24);
  CHECK(A.elements_of_order(2).size() == 15);
  CHECK(A.elements_of_order(3).size() == 20);

  PermGroup trivial({}, 5);
  CHECK(trivial.order() == 1);
  CHECK(trivial.contains(Perm(5)));

  // orbit partition of <(01),(23)> on 5 points
  auto parts = orbit_partition({cycle(5, {0, 1}), cycle(5, {2, 3})}, 5);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::vector<int>({0, 1}));
  CHECK(parts[1] == std::vector<int>({2, 3}));
  CHECK(parts[2] == std::vector<int>({4}));

  PermGroup stab = G.point_stabilizer(4);
  CHECK(stab.order() == 24);
  for (const Perm& g : stab.generators()) CHECK(g[4] == 4);

  std::vector<Perm> s6 = {cycle(6, {0, 1}), cycle(6, {0, 1, 2, 3, 4, 5})};
  PermGroup S6(s6, 6);
  CHECK(S6.order() == 720);
  PermGroup sw = S6.setwise_stabilizer({0, 1});
  CHECK(sw.order() == 48);
  for (const Perm& g : sw.generators()) {
    CHECK(((g[0] == 0 && g[1] == 1) || (g[0] == 1 && g[1] == 0)));
  }
}

TEST_CASE("schreier sims on a seven cycle") {
  PermGroup C7({cycle(7, {0, 1, 2, 3, 4, 5, 6})}, 7);
  CHECK(C7.order() == 7);
  CHECK(C7.elements_of_order(7).size() == 6);
  CHECK(C7.base().size() == 1);
}
