#include "msolve/gpform.hpp"

#include <stdexcept>

#include "msolve/mahler.hpp"

namespace msolve {

GPForm bgpf_from_rational(const Poly& P, const Poly& Q, int r, int b) {
  if (r < 1 || b < 2) throw std::invalid_argument("bgpf_from_rational: need r >= 1 and b >= 2");
  if (P.is_zero() || Q.is_zero() || P.lc() != 1 || Q.lc() != 1)
    throw std::invalid_argument("bgpf_from_rational: P and Q must be monic");
  if (gcd(P, Q).deg() > 0) throw std::invalid_argument("bgpf_from_rational: P and Q must be coprime");
  GPForm f;
  f.b = b;
  f.r = r;
  f.A = P;
  f.B = Q;
  f.C = Poly(1);
  for (int k = 1; k < r; ++k) {
    Poly MB = f.B.compose_pow(b);
    Poly G = gcd(f.A, MB);
    Poly prod = f.C.compose_pow(b);
    Poly Gi = G;
    for (int i = 0; i < k; ++i) {
      prod *= Gi;
      Gi = Gi.compose_pow(b);
    }
    f.A = exact_div(f.A, G);
    f.B = exact_div(MB, G);
    f.C = prod;
  }
  return f;
}

bool check_bgpf(const GPForm& form, const RatFun& u) {
  const int b = form.b, r = form.r;
  if (form.zeta == 0 || form.A.is_zero() || form.B.is_zero() || form.C.is_zero()) return false;
  if (form.A.lc() != 1 || form.B.lc() != 1 || form.C.lc() != 1) return false;
  const Poly MrA = mahler_pow(form.A, b, r - 1);
  int e = 1;
  for (int i = 1; i < r; ++i) e *= b;
  RatFun lhs = u.compose_pow(e);
  RatFun rhs = RatFun(form.C.compose_pow(b) * MrA * form.zeta, form.C * form.B);
  if (!(lhs == rhs)) return false;
  if (gcd(MrA, form.C).deg() > 0) return false;
  if (gcd(form.B, form.C.compose_pow(b)).deg() > 0) return false;
  Poly MiA = form.A;
  for (int i = 0; i < r; ++i) {
    if (gcd(MiA, form.B).deg() > 0) return false;
    MiA = MiA.compose_pow(b);
  }
  return true;
}

}  // namespace msolve
