#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace szv {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact dyadic rational num / 2^exp, kept canonical: num odd or zero,
// exp == 0 when num == 0.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(long v) : num_(v), exp_(0) { canonicalize(); }
  Dyadic(mpz_class num, unsigned exp) : num_(std::move(num)), exp_(exp) {
    canonicalize();
  }

  static Dyadic half(long v) { return Dyadic(mpz_class(v), 1); }

  const mpz_class& num() const { return num_; }
  unsigned exp() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  mpz_class to_integer() const {
    if (exp_ != 0) throw Error("dyadic not an integer: " + str());
    return num_;
  }

  long to_long() const {
    mpz_class z = to_integer();
    if (!z.fits_slong_p()) throw Error("dyadic overflows long");
    return z.get_si();
  }

  Dyadic operator-() const { return raw(-num_, exp_); }

  Dyadic operator+(const Dyadic& o) const {
    unsigned e = std::max(exp_, o.exp_);
    mpz_class a = num_ << (e - exp_);
    mpz_class b = o.num_ << (e - o.exp_);
    return Dyadic(a + b, e);
  }
  Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
  Dyadic operator*(const Dyadic& o) const {
    return Dyadic(num_ * o.num_, exp_ + o.exp_);
  }

  // Multiply by 2^k, k possibly negative; exact by construction.
  Dyadic mul_pow2(int k) const {
    if (is_zero()) return Dyadic();
    int e = static_cast<int>(exp_) - k;
    if (e >= 0) return raw(num_, static_cast<unsigned>(e));
    return raw(num_ << (-e), 0);
  }

  bool operator==(const Dyadic& o) const {
    return num_ == o.num_ && exp_ == o.exp_;
  }
  bool operator!=(const Dyadic& o) const { return !(*this == o); }
  bool operator<(const Dyadic& o) const {
    unsigned e = std::max(exp_, o.exp_);
    return (num_ << (e - exp_)) < (o.num_ << (e - o.exp_));
  }

  // Textual encoding "num/2^exp"; integers print as plain "num".
  std::string str() const {
    if (exp_ == 0) return num_.get_str();
    return num_.get_str() + "/2^" + std::to_string(exp_);
  }

  static Dyadic parse(const std::string& s) {
    auto pos = s.find("/2^");
    if (pos == std::string::npos) return Dyadic(mpz_class(s), 0);
    mpz_class n(s.substr(0, pos));
    unsigned long e = std::stoul(s.substr(pos + 3));
    Dyadic d(std::move(n), static_cast<unsigned>(e));
    if (d.str() != s) throw Error("non-canonical dyadic encoding: " + s);
    return d;
  }

 private:
  static Dyadic raw(mpz_class num, unsigned exp) {
    Dyadic d;
    d.num_ = std::move(num);
    d.exp_ = exp;
    return d;
  }
  void canonicalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && mpz_even_p(num_.get_mpz_t())) {
      num_ >>= 1;
      --exp_;
    }
  }

  mpz_class num_;
  unsigned exp_;
};

}  // namespace szv
