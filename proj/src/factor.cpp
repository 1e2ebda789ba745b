#include "msolve/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace msolve {

bool poly_less(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i) {
    int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Poly FactoredPoly::expand() const {
  Poly r(content);
  for (const auto& [p, e] : factors) r *= pow(p, e);
  return r;
}

int FactoredPoly::multiplicity(const Poly& q) const {
  for (const auto& [p, e] : factors)
    if (p == q) return e;
  return 0;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (f.deg() <= 0) return out;
  Poly fm = f.monic();
  Poly d = fm.derivative();
  Poly a = gcd(fm, d);
  Poly b = exact_div(fm, a);
  Poly c = exact_div(d, a);
  Poly e = c - b.derivative();
  int i = 1;
  while (b.deg() > 0) {
    Poly g = gcd(b, e);
    if (g.deg() > 0) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(e, g);
    e = c - b.derivative();
    ++i;
  }
  return out;
}

Poly squarefree_part(const Poly& f) {
  if (f.deg() <= 0) return Poly(1);
  return exact_div(f, gcd(f, f.derivative())).monic();
}

namespace {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 fp_pow(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

u64 fp_inv(u64 a, u64 p) { return fp_pow(a, p - 2, p); }

FpPoly fp_sub(FpPoly a, const FpPoly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  fp_trim(a);
  return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(r);
  return r;
}

// In-place remainder; returns quotient when requested.
FpPoly fp_divmod(FpPoly a, const FpPoly& b, u64 p, FpPoly* quot = nullptr) {
  int db = static_cast<int>(b.size()) - 1;
  u64 inv = fp_inv(b.back(), p);
  FpPoly q;
  if (static_cast<int>(a.size()) - 1 >= db) q.assign(a.size() - db, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    u64 c = a[i] * inv % p;
    if (quot) q[i - db] = c;
    if (!c) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + (p - c) * b[j]) % p;
  }
  if (static_cast<int>(a.size()) > db) a.resize(db);
  fp_trim(a);
  if (quot) {
    fp_trim(q);
    *quot = q;
  }
  return a;
}

FpPoly fp_monic(FpPoly a, u64 p) {
  if (a.empty()) return a;
  u64 inv = fp_inv(a.back(), p);
  for (auto& v : a) v = v * inv % p;
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  while (!b.empty()) {
    FpPoly r = fp_divmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

FpPoly fp_derivative(const FpPoly& a, u64 p) {
  FpPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
  fp_trim(r);
  return r;
}

FpPoly fp_powmod(FpPoly base, u64 e, const FpPoly& f, u64 p) {
  FpPoly r{1};
  base = fp_divmod(base, f, p);
  while (e) {
    if (e & 1) r = fp_divmod(fp_mul(r, base, p), f, p);
    base = fp_divmod(fp_mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

// Berlekamp factorization of a monic squarefree polynomial over F_p.
std::vector<FpPoly> berlekamp(const FpPoly& f, u64 p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  // Rows of Q - I: x^{ip} mod f.
  std::vector<std::vector<u64>> Q(n, std::vector<u64>(n, 0));
  FpPoly xp = fp_powmod(FpPoly{0, 1}, p, f, p);
  FpPoly cur{1};
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.size(); ++j) Q[i][j] = cur[j];
    Q[i][i] = (Q[i][i] + p - 1) % p;
    cur = fp_divmod(fp_mul(cur, xp, p), f, p);
  }
  // Left kernel of Q: vectors v with v*Q = 0. Transpose and compute the right nullspace.
  std::vector<std::vector<u64>> A(n, std::vector<u64>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = Q[j][i];
  int row = 0;
  std::vector<int> where(n, -1);
  for (int col = 0; col < n && row < n; ++col) {
    int sel = -1;
    for (int i = row; i < n; ++i)
      if (A[i][col]) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(A[sel], A[row]);
    u64 inv = fp_inv(A[row][col], p);
    for (int j = 0; j < n; ++j) A[row][j] = A[row][j] * inv % p;
    for (int i = 0; i < n; ++i) {
      if (i == row || !A[i][col]) continue;
      u64 c = A[i][col];
      for (int j = 0; j < n; ++j) A[i][j] = (A[i][j] + (p - c) * A[row][j]) % p;
    }
    where[col] = row;
    ++row;
  }
  std::vector<FpPoly> basis;
  for (int free = 0; free < n; ++free) {
    if (where[free] >= 0) continue;
    FpPoly v(n, 0);
    v[free] = 1;
    for (int col = 0; col < n; ++col)
      if (where[col] >= 0) v[col] = (p - A[where[col]][free]) % p;
    fp_trim(v);
    basis.push_back(v);
  }
  const std::size_t k = basis.size();
  std::vector<FpPoly> factors{f};
  for (const auto& v : basis) {
    if (factors.size() == k) break;
    if (v.size() <= 1) continue;
    std::vector<FpPoly> next;
    for (const auto& u : factors) {
      if (u.size() <= 2) {
        next.push_back(u);
        continue;
      }
      FpPoly rem = u;
      for (u64 s = 0; s < p && rem.size() > 2; ++s) {
        FpPoly vs = v;
        vs[0] = (vs[0] + p - s) % p;
        fp_trim(vs);
        FpPoly g = fp_gcd(rem, vs, p);
        if (g.size() > 1 && g.size() < rem.size()) {
          next.push_back(g);
          FpPoly q;
          fp_divmod(rem, g, p, &q);
          rem = q;
        }
      }
      next.push_back(rem);
    }
    factors = std::move(next);
  }
  return factors;
}

// Arithmetic on integer polynomials modulo m (coefficients kept in [0, m)).
using ZPoly = std::vector<Integer>;

void z_trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

void z_reduce(ZPoly& a, const Integer& m) {
  for (auto& v : a) {
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  }
  z_trim(a);
}

ZPoly z_add(ZPoly a, const ZPoly& b, const Integer& m) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  z_reduce(a, m);
  return a;
}

ZPoly z_sub(ZPoly a, const ZPoly& b, const Integer& m) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  z_reduce(a, m);
  return a;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  z_reduce(r, m);
  return r;
}

// Division by a monic polynomial modulo m.
ZPoly z_divmod_monic(ZPoly a, const ZPoly& b, const Integer& m, ZPoly* quot) {
  int db = static_cast<int>(b.size()) - 1;
  ZPoly q;
  if (static_cast<int>(a.size()) - 1 >= db) q.assign(a.size() - db, Integer(0));
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    Integer c = a[i];
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (quot) q[i - db] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j) mpz_submul(a[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  if (static_cast<int>(a.size()) > db) a.resize(db);
  z_reduce(a, m);
  if (quot) {
    z_reduce(q, m);
    *quot = q;
  }
  return a;
}

ZPoly from_fp(const FpPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

// Extended gcd over F_p: s*g + t*h = 1.
void fp_xgcd(const FpPoly& g, const FpPoly& h, u64 p, FpPoly& s, FpPoly& t) {
  FpPoly r0 = g, r1 = h, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    FpPoly q;
    FpPoly r = fp_divmod(r0, r1, p, &q);
    FpPoly ns = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly nt = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(ns);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  u64 inv = fp_inv(r0.back(), p);
  for (auto& v : s0) v = v * inv % p;
  for (auto& v : t0) v = v * inv % p;
  s = s0;
  t = t0;
}

// Quadratic Hensel lifting of F = g*h (all monic) from p to modulus >= target.
void hensel_pair(const ZPoly& F, const FpPoly& g0, const FpPoly& h0, u64 p, const Integer& target,
                 ZPoly& g_out, ZPoly& h_out) {
  FpPoly s0, t0;
  fp_xgcd(g0, h0, p, s0, t0);
  ZPoly g = from_fp(g0), h = from_fp(h0), s = from_fp(s0), t = from_fp(t0);
  Integer m = static_cast<unsigned long>(p);
  while (m < target) {
    Integer m2 = m * m;
    ZPoly e = z_sub(F, z_mul(g, h, m2), m2);
    ZPoly q;
    ZPoly r = z_divmod_monic(z_mul(s, e, m2), h, m2, &q);
    ZPoly gn = z_add(z_add(g, z_mul(t, e, m2), m2), z_mul(q, g, m2), m2);
    ZPoly hn = z_add(h, r, m2);
    ZPoly one{Integer(1)};
    ZPoly bb = z_sub(z_add(z_mul(s, gn, m2), z_mul(t, hn, m2), m2), one, m2);
    ZPoly c;
    ZPoly d = z_divmod_monic(z_mul(s, bb, m2), hn, m2, &c);
    s = z_sub(s, d, m2);
    t = z_sub(z_sub(t, z_mul(t, bb, m2), m2), z_mul(c, gn, m2), m2);
    g = std::move(gn);
    h = std::move(hn);
    m = m2;
  }
  z_reduce(g, target);
  z_reduce(h, target);
  g_out = g;
  h_out = h;
}

FpPoly to_fp(const ZPoly& a, u64 p) {
  FpPoly r(a.size());
  Integer pp = static_cast<unsigned long>(p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer v;
    mpz_mod(v.get_mpz_t(), a[i].get_mpz_t(), pp.get_mpz_t());
    r[i] = v.get_ui();
  }
  fp_trim(r);
  return r;
}

// Lift monic F (mod modulus) whose reduction mod p is the product of the given monic factors.
void hensel_multi(const ZPoly& F, const std::vector<FpPoly>& fac, u64 p, const Integer& modulus,
                  std::vector<ZPoly>& out) {
  if (fac.size() == 1) {
    out.push_back(F);
    return;
  }
  std::size_t half = fac.size() / 2;
  std::vector<FpPoly> left(fac.begin(), fac.begin() + half), right(fac.begin() + half, fac.end());
  FpPoly g0{1}, h0{1};
  for (const auto& f : left) g0 = fp_mul(g0, f, p);
  for (const auto& f : right) h0 = fp_mul(h0, f, p);
  ZPoly g, h;
  hensel_pair(F, g0, h0, p, modulus, g, h);
  hensel_multi(g, left, p, modulus, out);
  hensel_multi(h, right, p, modulus, out);
}

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer symmetric(const Integer& v, const Integer& m) {
  Integer r = v % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// Factor a primitive squarefree integer polynomial with positive leading coefficient and f(0) != 0.
std::vector<Poly> zassenhaus(const Poly& fin) {
  const int n = fin.deg();
  if (n <= 1) return {fin.monic()};
  std::vector<Integer> f = to_integer_coeffs(fin);
  Integer lcf = f.back();

  // Select among several good primes the one with the fewest modular factors.
  std::vector<FpPoly> best;
  u64 best_p = 0;
  int tried = 0;
  for (u64 p = 11; tried < 6 && p < 100000; ++p) {
    if (!is_prime_small(p)) continue;
    FpPoly fp = to_fp(f, p);
    if (static_cast<int>(fp.size()) - 1 != n) continue;
    fp = fp_monic(fp, p);
    FpPoly g = fp_gcd(fp, fp_derivative(fp, p), p);
    if (g.size() > 1) continue;
    ++tried;
    auto fac = berlekamp(fp, p);
    if (best_p == 0 || fac.size() < best.size()) {
      best = std::move(fac);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw std::runtime_error("factor: no suitable prime");
  if (best.size() == 1) return {fin.monic()};
  std::sort(best.begin(), best.end(), [](const FpPoly& a, const FpPoly& b) { return a.size() < b.size(); });

  // Mignotte-style bound on factor coefficients: 2^n * ||f||_2 * |lc|.
  Integer norm2 = 0;
  for (const auto& v : f) norm2 += v * v;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = norm * abs(lcf);
  bound <<= n;
  bound *= 2;
  Integer modulus = static_cast<unsigned long>(best_p);
  while (modulus <= bound) modulus *= static_cast<unsigned long>(best_p);

  // Monic lift target: f * lc^{-1} mod modulus.
  Integer inv_lc;
  mpz_invert(inv_lc.get_mpz_t(), lcf.get_mpz_t(), modulus.get_mpz_t());
  ZPoly F = f;
  for (auto& v : F) v *= inv_lc;
  z_reduce(F, modulus);
  std::vector<ZPoly> lifted;
  hensel_multi(F, best, best_p, modulus, lifted);

  // Recombination over subsets of increasing size.
  std::vector<Poly> result;
  std::vector<ZPoly> remaining = lifted;
  std::vector<Integer> cur = f;
  int s = 1;
  while (2 * s <= static_cast<int>(remaining.size())) {
    bool found = false;
    const int r = static_cast<int>(remaining.size());
    std::vector<int> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Integer lcc = cur.back();
      // Cheap constant-term test before forming the full product.
      Integer c0 = lcc;
      for (int i : idx) c0 = (c0 * remaining[i][0]) % modulus;
      c0 = symmetric(c0, modulus);
      Integer t = lcc * cur[0];
      bool plausible = sgn(c0) != 0 && sgn(t % c0) == 0;
      if (plausible) {
        ZPoly g{lcc};
        for (int i : idx) g = z_mul(g, remaining[i], modulus);
        std::vector<Rational> gc(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) gc[i] = Rational(symmetric(g[i], modulus));
        Poly gq = Poly(gc).primitive();
        Poly curq = from_integer_coeffs(cur);
        auto [q, rem] = divmod(curq, gq);
        if (rem.is_zero()) {
          result.push_back(gq.monic());
          cur = to_integer_coeffs(q.primitive());
          std::vector<ZPoly> rest;
          for (int i = 0; i < r; ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(remaining[i]);
          remaining = std::move(rest);
          found = true;
          break;
        }
      }
      int k = s - 1;
      while (k >= 0 && idx[k] == r - s + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  Poly last = from_integer_coeffs(cur);
  if (last.deg() > 0) result.push_back(last.monic());
  return result;
}

}  // namespace

FactoredPoly factor(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  FactoredPoly out;
  out.content = f.lc();
  for (const auto& [s, e] : squarefree_decomposition(f)) {
    Poly g = s;
    int v = g.val();
    if (v > 0) {
      out.factors.emplace_back(Poly::x(), e);
      g = g.shift(-v);
    }
    if (g.deg() <= 0) continue;
    for (auto& h : zassenhaus(g.primitive())) out.factors.emplace_back(h, e);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

std::vector<Rational> rational_roots(const Poly& f) {
  std::vector<Rational> roots;
  if (f.deg() <= 0) return roots;
  for (const auto& [p, e] : factor(f).factors)
    if (p.deg() == 1) roots.push_back(-p.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// Bareiss determinant of a square polynomial matrix.
Poly det_bareiss(std::vector<std::vector<Poly>> A) {
  const int n = static_cast<int>(A.size());
  Poly prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A[k][k].is_zero()) {
      int sel = -1;
      for (int i = k + 1; i < n; ++i)
        if (!A[i][k].is_zero()) {
          sel = i;
          break;
        }
      if (sel < 0) return Poly();
      std::swap(A[k], A[sel]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) A[i][j] = exact_div(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev);
    prev = A[k][k];
  }
  Poly d = A[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace

Poly graeffe(const Poly& f, int b) {
  if (f.is_zero()) throw std::invalid_argument("graeffe: zero polynomial");
  if (f.deg() == 0) return Poly(1);
  // f(y) = sum_i y^i f_i(y^b); multiplication by f on the basis 1, y, ..., y^{b-1} of Q[x][y]/(y^b - x).
  std::vector<Poly> parts(b);
  for (int k = 0; k <= f.deg(); ++k) parts[k % b].set_coeff(k / b, f.coeffs()[k]);
  std::vector<std::vector<Poly>> A(b, std::vector<Poly>(b));
  for (int j = 0; j < b; ++j)
    for (int i = 0; i < b; ++i) {
      int e = i + j;
      Poly v = parts[i];
      if (e >= b) {
        e -= b;
        v = v.shift(1);
      }
      A[e][j] += v;
    }
  return det_bareiss(std::move(A)).monic();
}

Poly graeffe_newton(const Poly& f, int b) {
  if (f.is_zero()) throw std::invalid_argument("graeffe: zero polynomial");
  const int n = f.deg();
  if (n == 0) return Poly(1);
  Poly m = f.monic();
  // e_k from monic coefficients: m = x^n - e1 x^{n-1} + e2 x^{n-2} - ...
  auto a = [&](int k) -> Rational { return k > n ? Rational(0) : m.coeff(n - k); };
  const int top = n * b;
  std::vector<Rational> ps(top + 1);
  for (int k = 1; k <= top; ++k) {
    Rational s = -Rational(k) * a(k);
    for (int i = 1; i < k && i <= n; ++i) s -= a(i) * ps[k - i];
    ps[k] = s;
  }
  std::vector<Rational> P(n + 1), c(n + 1);
  for (int k = 1; k <= n; ++k) P[k] = ps[k * b];
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i) s += c[k - i] * P[i];
    c[k] = -s / k;
  }
  std::vector<Rational> out(n + 1);
  for (int k = 0; k <= n; ++k) out[n - k] = c[k];
  return Poly(out);
}

}  // namespace msolve
