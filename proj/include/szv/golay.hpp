#ifndef SZV_GOLAY_HPP
#define SZV_GOLAY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "szv/dyadic.hpp"

namespace szv {

// Binary Golay code of length 24 via the Turyn construction over three
// octonion-coordinate blocks of 8 (slot 0 = real part, slot 1+t = i_t).
// E and F are the Hamming [8,4] codes spanned by {0} together with the
// Fano lines (t,t+1,t+3) resp. the complementary lines (t,t+2,t+3),
// completed by the all-ones word.  The Golay code is spanned by
// (e,e,0), (0,e,e) for e in E and (f,f,f) for f in F.
class Golay {
 public:
  static const Golay& instance() {
    static const Golay g;
    return g;
  }

  bool contains(uint32_t mask) const { return reduce(mask) == 0; }

  const std::vector<uint32_t>& basis() const { return basis_; }

  // All 4096 codewords, sorted.
  const std::vector<uint32_t>& codewords() const { return words_; }
  // The 759 weight-8 codewords, sorted.
  const std::vector<uint32_t>& octads() const { return octads_; }
  // The 2576 weight-12 codewords, sorted.
  const std::vector<uint32_t>& dodecads() const { return dodecads_; }

  // Cocode weight (distance from the coset mask+code to 0); 0..4.
  int cocode_weight(uint32_t mask) const {
    int best = 24;
    for (uint32_t w : words_) {
      int wt = __builtin_popcount((mask ^ w) & 0xFFFFFF);
      if (wt < best) best = wt;
    }
    return best;
  }

  // Canonical coset representative of mask + code (linear in mask).
  uint32_t reduce(uint32_t v) const {
    for (uint32_t b : basis_) {
      if (v == 0) break;
      if (lead(v) == lead(b)) v ^= b;
    }
    return v;
  }

 private:
  Golay() {
    std::vector<uint32_t> e_words, f_words;
    for (int t = 0; t < 7; ++t) {
      uint32_t line = 1u;  // slot 0
      for (int d : {0, 1, 3}) line |= 1u << (1 + (t + d) % 7);
      e_words.push_back(line);
      uint32_t anti = 1u;
      for (int d : {0, 2, 3}) anti |= 1u << (1 + (t + d) % 7);
      f_words.push_back(anti);
    }
    e_words.push_back(0xFFu);
    f_words.push_back(0xFFu);
    auto eb = echelon(e_words);
    auto fb = echelon(f_words);
    std::vector<uint32_t> gens;
    for (uint32_t e : eb) {
      gens.push_back(e | (e << 8));
      gens.push_back((e << 8) | (e << 16));
    }
    for (uint32_t f : fb) gens.push_back(f | (f << 8) | (f << 16));
    basis_ = echelon(gens);
    if (basis_.size() != 12) throw Error("Golay basis rank != 12");
    words_.reserve(4096);
    for (uint32_t sel = 0; sel < 4096; ++sel) {
      uint32_t w = 0;
      for (int k = 0; k < 12; ++k)
        if (sel & (1u << k)) w ^= basis_[k];
      words_.push_back(w);
    }
    std::sort(words_.begin(), words_.end());
    for (uint32_t w : words_) {
      int wt = __builtin_popcount(w);
      if (wt == 8) octads_.push_back(w);
      if (wt == 12) dodecads_.push_back(w);
    }
    if (octads_.size() != 759 || dodecads_.size() != 2576)
      throw Error("Golay weight distribution wrong");
  }

  static int lead(uint32_t v) { return 31 - __builtin_clz(v); }

  static std::vector<uint32_t> echelon(const std::vector<uint32_t>& gens) {
    std::array<uint32_t, 24> piv{};
    for (uint32_t g : gens) {
      uint32_t v = g;
      while (v) {
        int l = lead(v);
        if (!piv[l]) {
          piv[l] = v;
          v = 0;
        } else {
          v ^= piv[l];
        }
      }
    }
    std::vector<uint32_t> out;
    for (int l = 23; l >= 0; --l)
      if (piv[l]) out.push_back(piv[l]);
    // back-substitute for a reduced basis
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = i + 1; j < out.size(); ++j)
        if (out[i] & (1u << lead(out[j]))) out[i] ^= out[j];
    return out;
  }

  std::vector<uint32_t> basis_;
  std::vector<uint32_t> words_;
  std::vector<uint32_t> octads_;
  std::vector<uint32_t> dodecads_;
};

// Membership in the standard-scaling Leech lattice (minimum norm 32):
// coordinates all congruent to m mod 2; the set where v_i = m+2 mod 4 is
// a Golay codeword; the coordinate sum is 4m mod 8.
inline bool leech_member(const std::array<long, 24>& v) {
  long m = ((v[0] % 2) + 2) % 2;
  for (long x : v)
    if (((x - m) % 2 + 2) % 2 != 0) return false;
  uint32_t mask = 0;
  long sum = 0;
  for (int i = 0; i < 24; ++i) {
    long r = ((v[i] - m - 2) % 4 + 4) % 4;
    if (r == 0) mask |= 1u << i;
    sum += v[i];
  }
  if (!Golay::instance().contains(mask)) return false;
  return ((sum - 4 * m) % 8 + 8) % 8 == 0;
}

inline long dot24(const std::array<long, 24>& a, const std::array<long, 24>& b) {
  long s = 0;
  for (int i = 0; i < 24; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace szv

#endif
