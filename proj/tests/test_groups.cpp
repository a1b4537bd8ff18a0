#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "szv/groups_data.hpp"
#include "szv/mod2.hpp"

using namespace szv;

TEST_CASE("M24 loads from disk with certified code preservation") {
  const PermGroup& g = m24();
  REQUIRE(g.degree() == 24);
  REQUIRE(g.order() == 244823040);
  REQUIRE(g.contains(sigma7_perm()));
  REQUIRE(sigma7_perm().order() == 7);
}

TEST_CASE("coordinate rotation is a Golay automorphism fixing the octad") {
  const Perm& s = sigma7_perm();
  REQUIRE(s.order() == 7);
  const Golay& code = Golay::instance();
  for (uint32_t w : code.basis()) REQUIRE(code.contains(perm_mask(w, s)));
  // on the block-0 octad it fixes slot 0 and 7-cycles the rest
  REQUIRE(perm_mask(octad_block0, s) == octad_block0);
  REQUIRE(s[0] == 0);
  REQUIRE(octad_stabilizer().contains(s));
  // its induced matrix on the lattice classes has the same order
  REQUIRE(f2pow(sigma7_mod2(), 7) == F2Mat::identity(24));
}

TEST_CASE("octad stabilizer and its pointwise kernel") {
  REQUIRE(octad_stabilizer().order() == 322560);
  const PermGroup& k = octad_kernel();
  REQUIRE(k.order() == 16);
  for (const Perm& t : k.generators()) {
    for (int p = 0; p < 8; ++p) REQUIRE(t[p] == p);
    if (!t.is_identity()) REQUIRE((t * t).is_identity());
  }
  REQUIRE(octad_stabilizer().is_subgroup_of(m24()));
}

TEST_CASE("dodecad pair stabilizer has order 190080") {
  uint32_t d = sample_dodecad();
  REQUIRE(__builtin_popcount(d) == 12);
  const auto& dode = Golay::instance().dodecads();
  REQUIRE(std::binary_search(dode.begin(), dode.end(), d));
  const PermGroup& s = dodecad_pair_stabilizer();
  REQUIRE(s.order() == 190080);
  REQUIRE(s.is_subgroup_of(m24()));
  bool swaps = false;
  for (const Perm& g : s.generators())
    if (perm_mask(d, g) == (~d & 0xFFFFFFu)) swaps = true;
  bool keeps = std::all_of(s.generators().begin(), s.generators().end(),
                           [&](const Perm& g) {
                             uint32_t i = perm_mask(d, g);
                             return i == d || i == (~d & 0xFFFFFFu);
                           });
  REQUIRE(keeps);
  INFO("some generator swaps the pair: " << swaps);
}

TEST_CASE("small matrix-built groups have the right orders") {
  REQUIRE(alt7().order() == 2520);
  REQUIRE(l32_on7().order() == 168);
  REQUIRE(a7_x_l32().order() == 423360);
  REQUIRE(agl18().order() == 56);
  REQUIRE(sl23_on8().order() == 24);
  REQUIRE(affine49().order() == 3528);
  REQUIRE(dihedral8().order() == 8);
  REQUIRE(elementary2(6).order() == 64);
  REQUIRE(direct_product(dihedral8(), dihedral8()).order() == 64);
  REQUIRE(direct_product(elementary2(6), agl18()).order() == 3584);
}

TEST_CASE("the 49-point affine group has SL(2,3)-shaped point stabilizer") {
  const PermGroup& g = affine49();
  PermGroup s0 = g.point_stabilizer(0);
  REQUIRE(s0.order() == 72);
  // unique involution in the Sylow 2-subgroup: -I is the only element of
  // order 2 in the whole linear part
  REQUIRE(s0.elements_of_order(2).size() == 1);
}

TEST_CASE("Golay modules: dimensions, closure, homomorphism property") {
  GolayModule a = code_mod_omega_module();
  GolayModule b = even_cocode_module();
  REQUIRE(a.dim() == 11);
  REQUIRE(b.dim() == 11);
  const PermGroup& g = octad_stabilizer();
  for (const GolayModule& m : {a, b}) {
    const Perm& p = g.generators()[0];
    const Perm& q = g.generators()[1 % g.generators().size()];
    F2Mat mp = m.action(p), mq = m.action(q);
    REQUIRE(mp.rank() == 11);
    REQUIRE(m.action(p * q) == f2mul(mp, mq));
    REQUIRE(m.action(sigma7_perm()).rows() == 11);
  }
  // the two modules really are different: compare socle layer shapes under
  // the full octad stabilizer later; here just check the basis sets differ
  REQUIRE(a.basis != b.basis);
}

TEST_CASE("module vectors outside the span are rejected") {
  GolayModule a = code_mod_omega_module();
  REQUIRE_THROWS_AS(a.coords(0x3u), Error);  // weight-2 mask is not a codeword
}
