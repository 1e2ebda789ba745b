#pragma once

#include "msolve/poly.hpp"
#include "msolve/ratfun.hpp"

namespace msolve {

// u(t^{b^{r-1}}) = zeta * C(t^b)/C(t) * A(t^{b^{r-1}})/B(t), with the coprimality conditions
// gcd(M^{r-1}A, C) = gcd(B, MC) = gcd(M^i A, B) = 1 for 0 <= i < r.
struct GPForm {
  Rational zeta = 1;
  Poly A = Poly(1), B = Poly(1), C = Poly(1);
  int r = 2;
  int b = 2;
};

// Runs (A, B, C) = (P, Q, 1), then A/G, MB/G, MC * G MG ... M^{k-1}G with G = gcd(A, MB), up to order r.
GPForm bgpf_from_rational(const Poly& P, const Poly& Q, int r, int b);
bool check_bgpf(const GPForm& form, const RatFun& u);

}  // namespace msolve
