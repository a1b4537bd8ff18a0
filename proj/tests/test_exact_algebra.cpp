#include <catch2/catch_amalgamated.hpp>

#include "szv/dyadic.hpp"
#include "szv/f2.hpp"
#include "szv/f8.hpp"
#include "szv/octonion.hpp"

using namespace szv;

TEST_CASE("dyadic canonical form") {
  CHECK(Dyadic(mpz_class(4), 2) == Dyadic(1));
  CHECK(Dyadic(mpz_class(6), 1) == Dyadic(3));
  CHECK(Dyadic(mpz_class(0), 5) == Dyadic(0));
  CHECK(Dyadic(mpz_class(0), 5).exp() == 0);
  CHECK(Dyadic::half(3).str() == "3/2^1");
  CHECK(Dyadic(-12).str() == "-12");
  CHECK(Dyadic::half(-1) + Dyadic::half(1) == Dyadic(0));
  CHECK(Dyadic::half(1) * Dyadic(2) == Dyadic(1));
  CHECK(Dyadic(5).mul_pow2(-3).str() == "5/2^3");
  CHECK(Dyadic::half(7).mul_pow2(1) == Dyadic(7));
  CHECK(Dyadic::half(1) < Dyadic(1));
  CHECK(Dyadic(-1) < Dyadic::half(-1));
}

TEST_CASE("dyadic text round trip") {
  for (const char* s : {"0", "1", "-5", "3/2^1", "-7/2^4", "12345/2^2"}) {
    CHECK(Dyadic::parse(s).str() == s);
  }
  CHECK_THROWS_AS(Dyadic::parse("4/2^1"), Error);
  CHECK_THROWS_AS(Dyadic::parse("0/2^3"), Error);
  CHECK_THROWS_AS(Dyadic::half(1).to_integer(), Error);
}

TEST_CASE("f8 arithmetic") {
  F8 eta = F8::eta();
  CHECK(eta * eta * eta == eta + F8::one());
  std::set<uint8_t> powers;
  F8 p = F8::one();
  for (int k = 0; k < 7; ++k) {
    powers.insert(p.bits());
    p = p * eta;
  }
  CHECK(p == F8::one());
  CHECK(powers.size() == 7);
  for (int a = 1; a < 8; ++a) CHECK(F8(a) * F8(a).inv() == F8::one());
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      CHECK((F8(a) + F8(b)).square() == F8(a).square() + F8(b).square());
      for (int c = 0; c < 8; ++c)
        CHECK((F8(a) * F8(b)) * F8(c) == F8(a) * (F8(b) * F8(c)));
    }
}

namespace {
Octonion dense_oct(int seed) {
  Octonion o;
  for (int k = 0; k < 8; ++k)
    o[k] = Dyadic::half(((seed >> k) & 1) ? 3 : -1) + Dyadic(k * seed % 5);
  return o;
}
}  // namespace

TEST_CASE("octonion unit table") {
  for (int t = 0; t < 7; ++t) {
    Octonion a = Octonion::unit(t);
    Octonion b = Octonion::unit((t + 1) % 7);
    Octonion c = Octonion::unit((t + 3) % 7);
    CHECK(a * b == c);
    CHECK(b * a == -c);
    CHECK(a * a == Octonion::scalar(Dyadic(-1)));
  }
  for (int u = 0; u < 7; ++u)
    for (int v = 0; v < 7; ++v) {
      if (u == v) continue;
      CHECK(Octonion::unit(u) * Octonion::unit(v) ==
            -(Octonion::unit(v) * Octonion::unit(u)));
    }
}

TEST_CASE("octonion s element") {
  Octonion s = Octonion::s();
  CHECK(s.norm() == Dyadic(2));
  CHECK(s.trace() == Dyadic(-1));
  CHECK(Octonion::sbar() == Octonion::scalar(Dyadic(-1)) - s);
  CHECK(s * s.conj() == Octonion::scalar(Dyadic(2)));
  // minimal polynomial x^2 + x + 2
  CHECK(s * s + s + Octonion::scalar(Dyadic(2)) == Octonion());
}

TEST_CASE("octonion algebra laws") {
  for (int i = 0; i < 6; ++i) {
    Octonion x = dense_oct(37 * i + 5);
    Octonion y = dense_oct(91 * i + 2);
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK((x * y).conj() == y.conj() * x.conj());
    CHECK(x * (x * y) == (x * x) * y);
    CHECK((y * x) * x == y * (x * x));
    CHECK((x * y) * x == x * (y * x));
  }
  // witness of non-associativity
  Octonion i0 = Octonion::unit(0), i1 = Octonion::unit(1),
           i2 = Octonion::unit(2);
  CHECK((i0 * i1) * i2 != i0 * (i1 * i2));
}

TEST_CASE("f2 matrix rank kernel solve") {
  F2Mat id = F2Mat::identity(5);
  CHECK(id.rank() == 5);
  CHECK(id.kernel().rows() == 0);

  F2Mat m(3, 4);
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 1, true);
  m.set(1, 2, true);
  m.set(2, 0, true);
  m.set(2, 2, true);  // row2 = row0 + row1
  CHECK(m.rank() == 2);
  F2Mat ker = m.kernel();
  CHECK(ker.rows() == 2);
  for (int r = 0; r < ker.rows(); ++r) {
    // kernel rows annihilate m acting on columns: m * ker_row^T = 0
    for (int i = 0; i < m.rows(); ++i) {
      bool dot = false;
      for (int c = 0; c < m.cols(); ++c)
        dot ^= m.get(i, c) && ker.get(r, c);
      CHECK_FALSE(dot);
    }
  }

  auto [ok, x] = m.solve_left({true, false, true, false});
  REQUIRE(ok);
  std::vector<bool> back(4, false);
  for (int r = 0; r < 3; ++r)
    if (x[r])
      for (int c = 0; c < 4; ++c) back[c] = back[c] ^ m.get(r, c);
  CHECK(back == std::vector<bool>({true, false, true, false}));
  CHECK_FALSE(m.solve_left({false, false, false, true}).first);
  CHECK(m.in_row_space({true, true, false, false}));
}

TEST_CASE("f2 matrix product and powers") {
  F2Mat c7(7, 7);
  for (int i = 0; i < 7; ++i) c7.set(i, (i + 1) % 7, true);
  CHECK(f2pow(c7, 7) == F2Mat::identity(7));
  CHECK(f2pow(c7, 3) == f2mul(c7, f2mul(c7, c7)));
  CHECK(f2mul(c7, F2Mat::identity(7)) == c7);
}
