#pragma once

#include <string>

#include "msolve/poly.hpp"

namespace msolve {

// Reduced rational function num/den with monic denominator.
class RatFun {
 public:
  RatFun() : num_(), den_(1) {}
  RatFun(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const { return RatFun(-num_, den_); }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  RatFun compose_pow(int b) const { return RatFun(num_.compose_pow(b), den_.compose_pow(b), true); }
  RatFun inverse() const;
  std::string to_string(const std::string& var = "x") const;

 private:
  RatFun(Poly num, Poly den, bool /*already reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  Poly num_, den_;
};

// Laurent polynomial x^shift * p(x).
struct Laurent {
  int shift = 0;
  Poly p;

  Laurent() = default;
  Laurent(int s, Poly q);
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    return Laurent(a.shift + b.shift, a.p * b.p);
  }
  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.shift == b.shift && a.p == b.p;
  }
};

}  // namespace msolve
