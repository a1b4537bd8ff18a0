#pragma once

#include <array>
#include <cstdint>

#include "szv/dyadic.hpp"

namespace szv {

// GF(8) as F2[eta]/(eta^3 = eta + 1).  Elements are 3-bit values with
// basis {1, eta, eta^2}: bit k is the coefficient of eta^k.
class F8 {
 public:
  constexpr F8() : v_(0) {}
  constexpr explicit F8(uint8_t v) : v_(v & 7u) {}

  static constexpr F8 zero() { return F8(0); }
  static constexpr F8 one() { return F8(1); }
  static constexpr F8 eta() { return F8(2); }

  constexpr uint8_t bits() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  constexpr F8 operator+(F8 o) const { return F8(v_ ^ o.v_); }
  constexpr F8 operator-(F8 o) const { return *this + o; }

  F8 operator*(F8 o) const { return F8(mul_table()[v_][o.v_]); }

  F8 square() const { return *this * *this; }
  F8 pow(unsigned e) const {
    F8 r = one(), b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  F8 inv() const {
    if (is_zero()) throw Error("F8 division by zero");
    return pow(6);
  }

  constexpr bool operator==(F8 o) const { return v_ == o.v_; }
  constexpr bool operator!=(F8 o) const { return v_ != o.v_; }
  constexpr bool operator<(F8 o) const { return v_ < o.v_; }

 private:
  static const std::array<std::array<uint8_t, 8>, 8>& mul_table() {
    static const auto t = [] {
      std::array<std::array<uint8_t, 8>, 8> m{};
      for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
          unsigned p = 0, x = static_cast<unsigned>(a);
          for (int k = 0; k < 3; ++k) {
            if (b & (1 << k)) p ^= x << k;
          }
          // reduce mod eta^3 = eta + 1
          for (int k = 4; k >= 3; --k) {
            if (p & (1u << k)) p ^= (1u << k) | (3u << (k - 3));
          }
          m[a][b] = static_cast<uint8_t>(p & 7u);
        }
      return m;
    }();
    return t;
  }

  uint8_t v_;
};

}  // namespace szv
