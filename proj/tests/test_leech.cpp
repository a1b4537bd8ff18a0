#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "szv/enumerate.hpp"
#include "szv/leech_oct.hpp"
#include "szv/leech_std.hpp"
#include "szv/samples.hpp"

using namespace szv;

static Vec24 random_member(std::mt19937_64& rng, int span = 3) {
  std::uniform_int_distribution<int> d(-span, span);
  Vec24 v{};
  for (int r = 0; r < 24; ++r) {
    int a = d(rng);
    if (!a) continue;
    for (int k = 0; k < 24; ++k) v[k] += a * StdLattice::instance().basis()[r][k];
  }
  return v;
}

TEST_CASE("standard basis, gram and determinant") {
  const auto& L = StdLattice::instance();
  REQUIRE(L.det() == mpz_class(1) << 36);
  std::vector<std::vector<mpz_class>> g8(24, std::vector<mpz_class>(24));
  for (int r = 0; r < 24; ++r)
    for (int c = 0; c < 24; ++c) {
      REQUIRE(L.gram()[r][c] % 8 == 0);
      g8[r][c] = L.gram()[r][c] / 8;
    }
  for (int r = 0; r < 24; ++r) REQUIRE(g8[r][r] % 2 == 0);
  REQUIRE(det_mpz(g8) == 1);
}

TEST_CASE("membership predicate matches basis coordinates") {
  const auto& L = StdLattice::instance();
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 1000; ++it) {
    Vec24 v = random_member(rng);
    REQUIRE(L.member(v));
    REQUIRE(L.member_by_basis(v));
    Vec24 w = v;
    w[it % 24] += 1 + (it % 3);  // near-member perturbation
    REQUIRE(L.member(w) == L.member_by_basis(w));
  }
}

TEST_CASE("class bits round trip") {
  const auto& L = StdLattice::instance();
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    Vec24 v = random_member(rng);
    uint32_t bits = L.class_bits(v);
    Vec24 rep = L.from_class_bits(bits);
    // v - rep must lie in 2L: all coordinates of (v-rep)/2 integral members
    Vec24 diff;
    for (int k = 0; k < 24; ++k) diff[k] = v[k] - rep[k];
    bool all_even = true;
    for (long x : diff) all_even = all_even && x % 2 == 0;
    REQUIRE(all_even);
    Vec24 halfd;
    for (int k = 0; k < 24; ++k) halfd[k] = diff[k] / 2;
    REQUIRE(L.member(halfd));
  }
}

TEST_CASE("octonionic model: the eleven anchors are members") {
  for (const auto& s : calibration_vectors()) {
    INFO(s.name);
    Vec24 img;
    REQUIRE(oct_member(s.v, &img));
    long n = dot24(img, img);
    if (s.name == "exc")
      REQUIRE(n == 96);
    else
      REQUIRE(n == 64);
  }
}

TEST_CASE("octonionic and standard models agree on random members") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 1000; ++it) {
    Vec24 v = random_member(rng);
    OctTriple t = invdblC(v);
    Vec24 back;
    REQUIRE(oct_member(t, &back));
    REQUIRE(back == v);
  }
  // near-members: odd single-coordinate bumps must be rejected identically
  std::mt19937_64 rng2(100);
  for (int it = 0; it < 1000; ++it) {
    Vec24 v = random_member(rng2);
    v[it % 24] += 1;
    OctTriple t = invdblC(v);
    Vec24 img;
    bool om = oct_member(t, &img);
    REQUIRE(om == leech_member(v));
  }
}

TEST_CASE("every registered transformation preserves the lattice") {
  for (const auto& g : oct_gens()) {
    INFO(g.name);
    std::string why;
    REQUIRE(oct_preserves(g, &why));
  }
}

TEST_CASE("matrix generators commute with the unit rotation") {
  const auto& sig = oct_gen("sigma7");
  for (const char* name : {"g1", "m2", "swap01", "swap02", "swap12",
                           "cycle012", "cycle021"}) {
    const auto& g = oct_gen(name);
    for (int r = 0; r < 24; ++r) {
      OctTriple v = oct_basis_row(r);
      Vec24 a = oct_image(g.apply(sig.apply(v)));
      Vec24 b = oct_image(sig.apply(g.apply(v)));
      INFO(name << " row " << r);
      REQUIRE(a == b);
    }
  }
}

TEST_CASE("mod-2 matrices of the transformations are invertible and isometric") {
  const auto& L = StdLattice::instance();
  std::mt19937_64 rng(41);
  for (const auto& g : oct_gens()) {
    F2Mat M = oct_gen_mod2(g);
    REQUIRE(M.rank() == 24);
    for (int it = 0; it < 20; ++it) {
      Vec24 v = random_member(rng);
      uint32_t bits = L.class_bits(v);
      F2Mat row(1, 24);
      for (int j = 0; j < 24; ++j) row.set(0, j, (bits >> j) & 1);
      F2Mat img = f2mul(row, M);
      uint32_t ibits = 0;
      for (int j = 0; j < 24; ++j)
        if (img.get(0, j)) ibits |= 1u << j;
      REQUIRE(form_q(L.from_class_bits(ibits)) ==
              form_q(L.from_class_bits(bits)));
    }
  }
}

TEST_CASE("quadratic form is polarized by the bilinear form") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    Vec24 u = random_member(rng), w = random_member(rng);
    Vec24 sum;
    for (int k = 0; k < 24; ++k) sum[k] = u[k] + w[k];
    REQUIRE(form_q(sum) == (form_q(u) ^ form_q(w) ^ form_b(u, w)));
  }
}

TEST_CASE("class types of the eleven anchors are all 4") {
  for (const auto& s : calibration_vectors()) {
    INFO(s.name);
    REQUIRE(class_type(oct_image(s.v)) == 4);
  }
}

TEST_CASE("type-4 frames are 24 orthogonal sign pairs") {
  Vec24 v = oct_image(calibration_vector("four").v);
  Frame f = cross_frame(v);
  REQUIRE(f.reps.size() == 24);
  Vec24 canon = canonical_frame_rep(f);
  for (const auto& r : f.reps) REQUIRE(!(r < canon));
}

TEST_CASE("pair fixtures classify a,b,c in both models") {
  for (const auto& p : pair_fixtures()) {
    INFO(p.name);
    REQUIRE(classify_pure22(p.first, p.second) == p.expect);
  }
}

TEST_CASE("profiles are symmetric in the pair") {
  auto fx = pair_fixtures();
  Frame f1 = cross_frame(fx[0].first);
  Frame f2 = cross_frame(fx[0].second);
  REQUIRE(pair_profile_from(f1, f2) == pair_profile_from(f2, f1));
}

TEST_CASE("lattice minimum is 32 with 98280 minimal sign pairs", "[.slow]") {
  Vec24 zero{};
  auto below = lattice_enum().close_vectors(zero, 31);
  REQUIRE(below.size() == 1);  // the zero vector only
  auto mins = lattice_enum().close_vectors(zero, 32);
  REQUIRE(mins.size() == 98281);
  long count32 = 0;
  for (const auto& v : mins) {
    long n = dot24(v, v);
    REQUIRE((n == 0 || n == 32));
    if (n == 32) ++count32;
  }
  REQUIRE(count32 == 98280);
}
