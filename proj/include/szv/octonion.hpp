#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "szv/dyadic.hpp"

namespace szv {

// Octonions over the dyadic rationals.  Coordinate 0 is the real part;
// coordinate k (1..7) is the coefficient of the imaginary unit i_{k-1}.
// The seven imaginary units multiply by the oriented Fano lines
// (t, t+1, t+3) mod 7: i_t i_{t+1} = i_{t+3}, units anticommute and
// square to -1.
class Octonion {
 public:
  Octonion() = default;

  static Octonion scalar(Dyadic v) {
    Octonion o;
    o.c_[0] = std::move(v);
    return o;
  }
  // The imaginary unit i_t, 0 <= t < 7.
  static Octonion unit(int t) {
    Octonion o;
    o.c_[t + 1] = Dyadic(1);
    return o;
  }
  // s = (-1 + i_0 + ... + i_6)/2, a unit of norm 2.
  static Octonion s() {
    Octonion o;
    o.c_[0] = Dyadic::half(-1);
    for (int k = 1; k < 8; ++k) o.c_[k] = Dyadic::half(1);
    return o;
  }
  static Octonion sbar() { return s().conj(); }

  const Dyadic& operator[](int k) const { return c_[k]; }
  Dyadic& operator[](int k) { return c_[k]; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  Octonion operator+(const Octonion& o) const {
    Octonion r;
    for (int k = 0; k < 8; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
  }
  Octonion operator-(const Octonion& o) const {
    Octonion r;
    for (int k = 0; k < 8; ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
  }
  Octonion operator-() const {
    Octonion r;
    for (int k = 0; k < 8; ++k) r.c_[k] = -c_[k];
    return r;
  }
  Octonion scale(const Dyadic& v) const {
    Octonion r;
    for (int k = 0; k < 8; ++k) r.c_[k] = c_[k] * v;
    return r;
  }
  Octonion mul_pow2(int e) const {
    Octonion r;
    for (int k = 0; k < 8; ++k) r.c_[k] = c_[k].mul_pow2(e);
    return r;
  }

  Octonion operator*(const Octonion& o) const {
    Octonion r;
    for (int a = 0; a < 8; ++a) {
      if (c_[a].is_zero()) continue;
      for (int b = 0; b < 8; ++b) {
        if (o.c_[b].is_zero()) continue;
        auto [sign, idx] = basis_mul(a, b);
        Dyadic term = c_[a] * o.c_[b];
        r.c_[idx] = (sign > 0) ? r.c_[idx] + term : r.c_[idx] - term;
      }
    }
    return r;
  }

  Octonion conj() const {
    Octonion r;
    r.c_[0] = c_[0];
    for (int k = 1; k < 8; ++k) r.c_[k] = -c_[k];
    return r;
  }

  Dyadic norm() const {
    Dyadic n;
    for (const auto& v : c_) n = n + v * v;
    return n;
  }
  // Trace(x) = x + conj(x) is a scalar.
  Dyadic trace() const { return c_[0] + c_[0]; }

  bool operator==(const Octonion& o) const { return c_ == o.c_; }
  bool operator!=(const Octonion& o) const { return !(*this == o); }

  std::string str() const {
    std::string out = "(";
    for (int k = 0; k < 8; ++k) {
      if (k) out += ",";
      out += c_[k].str();
    }
    return out + ")";
  }

  // Basis product: indices 0..7 (0 = scalar one), result (sign, index).
  static std::pair<int, int> basis_mul(int a, int b) {
    const auto& t = table();
    return {t[a][b].first, t[a][b].second};
  }

 private:
  static const std::array<std::array<std::pair<int8_t, int8_t>, 8>, 8>&
  table() {
    static const auto tab = [] {
      std::array<std::array<std::pair<int8_t, int8_t>, 8>, 8> m{};
      for (int k = 0; k < 8; ++k) {
        m[0][k] = {1, static_cast<int8_t>(k)};
        m[k][0] = {1, static_cast<int8_t>(k)};
      }
      for (int k = 1; k < 8; ++k) m[k][k] = {-1, 0};
      for (int t = 0; t < 7; ++t) {
        int line[3] = {t, (t + 1) % 7, (t + 3) % 7};
        for (int j = 0; j < 3; ++j) {
          int a = line[j], b = line[(j + 1) % 3], c = line[(j + 2) % 3];
          m[a + 1][b + 1] = {1, static_cast<int8_t>(c + 1)};
          m[b + 1][a + 1] = {-1, static_cast<int8_t>(c + 1)};
        }
      }
      return m;
    }();
    return tab;
  }

  std::array<Dyadic, 8> c_{};
};

}  // namespace szv
