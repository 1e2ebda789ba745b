#include "msolve/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace msolve {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::monomial(const Rational& c, int k) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(k + 1, Rational(0));
  p.c_[k] = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::val() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

void Poly::set_coeff(int i, const Rational& v) {
  if (i >= static_cast<int>(c_.size())) {
    if (v == 0) return;
    c_.resize(i + 1, Rational(0));
  }
  c_[i] = v;
  trim();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

Poly& Poly::operator/=(const Rational& s) {
  if (s == 0) throw std::domain_error("Poly: division by zero");
  for (auto& v : c_) v /= s;
  return *this;
}

std::vector<Integer> to_integer_coeffs(const Poly& p, Integer* scale) {
  Integer d = p.denominator_lcm();
  std::vector<Integer> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& v = p.coeffs()[i];
    out[i] = v.get_num() * (d / v.get_den());
  }
  if (scale) *scale = d;
  return out;
}

Poly from_integer_coeffs(const std::vector<Integer>& c) {
  std::vector<Rational> r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = Rational(c[i]);
  return Poly(std::move(r));
}

namespace {

std::vector<Integer> mul_integer(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Integer sa, sb;
  auto ia = to_integer_coeffs(a, &sa);
  auto ib = to_integer_coeffs(b, &sb);
  auto ir = mul_integer(ia, ib);
  Integer s = sa * sb;
  std::vector<Rational> r(ir.size());
  for (std::size_t i = 0; i < ir.size(); ++i) {
    r[i] = Rational(ir[i], s);
    r[i].canonicalize();
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly pow(const Poly& p, unsigned e) {
  Poly r(1), base = p;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

Poly Poly::compose_pow(int b) const {
  if (c_.empty()) return Poly();
  Poly r;
  r.c_.assign(static_cast<std::size_t>(deg()) * b + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * b] = c_[i];
  return r;
}

bool Poly::divisible_exponents(int b) const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0 && i % b != 0) return false;
  return true;
}

Poly Poly::deflate(int b) const {
  if (!divisible_exponents(b)) throw std::logic_error("Poly::deflate: exponents not divisible");
  Poly r;
  if (c_.empty()) return r;
  r.c_.assign(deg() / b + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); i += b) r.c_[i / b] = c_[i];
  return r;
}

Poly Poly::shift(int k) const {
  if (c_.empty()) return Poly();
  Poly r;
  if (k >= 0) {
    r.c_.assign(k, Rational(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  } else if (-k < static_cast<int>(c_.size())) {
    r.c_.assign(c_.begin() - k, c_.end());
  }
  r.trim();
  return r;
}

Poly Poly::truncate(int n) const {
  if (n >= static_cast<int>(c_.size())) return *this;
  Poly r;
  if (n > 0) r.c_.assign(c_.begin(), c_.begin() + n);
  r.trim();
  return r;
}

Poly Poly::derivative() const {
  Poly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
  r.trim();
  return r;
}

Poly Poly::reverse(int n) const {
  Poly r;
  r.c_.assign(n + 1, Rational(0));
  for (int i = 0; i <= deg(); ++i) r.c_[n - i] = c_[i];
  r.trim();
  return r;
}

Poly Poly::compose(const Poly& g) const {
  Poly r;
  for (int i = deg(); i >= 0; --i) {
    r *= g;
    r += Poly(c_[i]);
  }
  return r;
}

Rational Poly::eval(const Rational& v) const {
  Rational r = 0;
  for (int i = deg(); i >= 0; --i) r = r * v + c_[i];
  return r;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this / lc();
}

Integer Poly::denominator_lcm() const {
  Integer d = 1;
  for (const auto& v : c_)
    if (v.get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den().get_mpz_t());
  return d;
}

Rational Poly::content() const {
  if (c_.empty()) return 0;
  Integer d = denominator_lcm();
  Integer g = 0;
  for (const auto& v : c_) {
    Integer n = v.get_num() * (d / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    if (g == 1) break;
  }
  Rational c(g, d);
  c.canonicalize();
  if (lc() < 0) c = -c;
  return c;
}

Poly Poly::primitive() const {
  if (c_.empty()) return *this;
  return *this / content();
}

bool Poly::is_integral() const {
  for (const auto& v : c_)
    if (v.get_den() != 1) return false;
  return true;
}

std::string Poly::to_string(const std::string& var, int q) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    const Rational& v = c_[i];
    if (v == 0) continue;
    Rational a = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    const int g = std::gcd(i, q);
    if (q / g > 1) os << "^(" << i / g << "/" << q / g << ")";
    else if (i / g > 1) os << "^" << i / g;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  if (a.deg() < b.deg()) return {Poly(), a};
  std::vector<Rational> r = a.coeffs();
  const int db = b.deg();
  const int dq = a.deg() - db;
  std::vector<Rational> q(dq + 1);
  Rational inv = 1 / b.lc();
  const auto& bc = b.coeffs();
  Rational t;
  for (int i = dq; i >= 0; --i) {
    Rational c = r[i + db] * inv;
    q[i] = c;
    if (c == 0) continue;
    for (int j = 0; j < db; ++j) {
      if (bc[j] == 0) continue;
      t = c * bc[j];
      r[i + j] -= t;
    }
    r[i + db] = 0;
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div: inexact division");
  return q;
}

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Primes just below 2^31, computed once and extended on demand.
std::uint64_t gcd_prime(std::size_t i) {
  static std::vector<std::uint64_t> primes;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::uint64_t p = primes.empty() ? 2147483649ULL : primes.back();
  while (primes.size() <= i) {
    do p -= 2;
    while (!is_prime(p));
    primes.push_back(p);
  }
  return primes[i];
}

std::vector<std::uint64_t> reduce_mod(const std::vector<Integer>& a, std::uint64_t p) {
  std::vector<std::uint64_t> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Monic gcd over GF(p).
std::vector<std::uint64_t> gcd_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulmod(a.back(), inv, p);
      const std::size_t off = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = (a[off + j] + p - mulmod(f, b[j], p)) % p;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  const std::uint64_t inv = powmod(a.back(), p - 2, p);
  for (auto& v : a) v = mulmod(v, inv, p);
  return a;
}

// Exact division test for integer polynomials with b primitive.
bool int_divides(const std::vector<Integer>& b, std::vector<Integer> a) {
  const std::size_t db = b.size() - 1;
  Integer q;
  while (!a.empty() && a.size() - 1 >= db) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    const std::size_t off = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(a[off + j].get_mpz_t(), q.get_mpz_t(), b[j].get_mpz_t());
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
  }
  return a.empty();
}

void make_primitive(std::vector<Integer>& a) {
  Integer g = 0;
  for (const auto& v : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.deg() == 0 || b.deg() == 0) return Poly(1);
  auto A = to_integer_coeffs(a);
  auto B = to_integer_coeffs(b);
  make_primitive(A);
  make_primitive(B);
  if (A.size() < B.size()) std::swap(A, B);
  Integer lg;
  mpz_gcd(lg.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
  std::vector<Integer> H, prev;
  Integer modulus = 0;
  int best = static_cast<int>(B.size());
  for (std::size_t pi = 0;; ++pi) {
    const std::uint64_t p = gcd_prime(pi);
    if (mpz_divisible_ui_p(A.back().get_mpz_t(), p) || mpz_divisible_ui_p(B.back().get_mpz_t(), p)) continue;
    auto h = gcd_mod(reduce_mod(A, p), reduce_mod(B, p), p);
    const int d = static_cast<int>(h.size()) - 1;
    if (d == 0) return Poly(1);
    if (d > best) continue;
    const std::uint64_t lm = mpz_fdiv_ui(lg.get_mpz_t(), p);
    for (auto& v : h) v = mulmod(v, lm, p);
    if (d < best) {
      best = d;
      H.assign(h.begin(), h.end());
      for (std::size_t i = 0; i < h.size(); ++i) H[i] = static_cast<unsigned long>(h[i]);
      modulus = static_cast<unsigned long>(p);
      prev.clear();
    } else {
      const std::uint64_t minv = powmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p - 2, p);
      for (std::size_t i = 0; i < h.size(); ++i) {
        const std::uint64_t hi = mpz_fdiv_ui(H[i].get_mpz_t(), p);
        const std::uint64_t t = mulmod((h[i] + p - hi) % p, minv, p);
        H[i] += modulus * static_cast<unsigned long>(t);
      }
      modulus *= static_cast<unsigned long>(p);
    }
    std::vector<Integer> G(H.size());
    const Integer half = modulus / 2;
    for (std::size_t i = 0; i < H.size(); ++i) {
      mpz_fdiv_r(G[i].get_mpz_t(), H[i].get_mpz_t(), modulus.get_mpz_t());
      if (G[i] > half) G[i] -= modulus;
    }
    make_primitive(G);
    if (G == prev && int_divides(G, B) && int_divides(G, A)) return from_integer_coeffs(G).monic();
    prev = std::move(G);
  }
}


Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return (exact_div(a, gcd(a, b)) * b).monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    Poly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  Rational l = r0.lc();
  return {r0 / l, s0 / l, t0 / l};
}

Rational resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  // Euclidean algorithm over Q with the usual sign and leading-coefficient bookkeeping.
  Poly f = a, g = b;
  Rational res = 1;
  while (true) {
    int df = f.deg(), dg = g.deg();
    if (dg == 0) {
      Rational p = 1;
      for (int i = 0; i < df; ++i) p *= g.lc();
      return res * p;
    }
    Poly r = f % g;
    if (r.is_zero()) return 0;
    int dr = r.deg();
    if ((df % 2 == 1) && (dg % 2 == 1)) res = -res;
    Rational p = 1;
    for (int i = 0; i < df - dr; ++i) p *= g.lc();
    res *= p;
    f = std::move(g);
    g = std::move(r);
  }
}

}  // namespace msolve
