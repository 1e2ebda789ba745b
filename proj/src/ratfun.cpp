#include "msolve/ratfun.hpp"

#include <stdexcept>

namespace msolve {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  Rational l = den_.lc();
  if (l != 1) {
    num_ /= l;
    den_ /= l;
  }
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::inverse() const {
  if (num_.is_zero()) throw std::domain_error("RatFun: inverse of zero");
  return RatFun(den_, num_);
}

std::string RatFun::to_string(const std::string& var) const {
  if (den_.is_one()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

Laurent::Laurent(int s, Poly q) : shift(s), p(std::move(q)) {
  if (p.is_zero()) {
    shift = 0;
    return;
  }
  int v = p.val();
  if (v > 0) {
    p = p.shift(-v);
    shift += v;
  }
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  if (a.p.is_zero()) return b;
  if (b.p.is_zero()) return a;
  int s = std::min(a.shift, b.shift);
  return Laurent(s, a.p.shift(a.shift - s) + b.p.shift(b.shift - s));
}

}  // namespace msolve
