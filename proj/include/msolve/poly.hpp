#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace msolve {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial over Q. Index i holds the coefficient of x^i.
// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static Poly monomial(const Rational& c, int k);
  static Poly x(int k = 1) { return monomial(1, k); }

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // Lowest exponent with a nonzero coefficient; -1 for zero.
  int val() const;

  // Coefficient of x^i, zero outside the support.
  Rational coeff(int i) const;
  const Rational& lc() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  void set_coeff(int i, const Rational& v);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);
  Poly& operator/=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const Rational& s) { return a /= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // x -> x^b, the action of the Mahler operator on coefficients.
  Poly compose_pow(int b) const;
  // Inverse of compose_pow; requires every exponent to be a multiple of b.
  bool divisible_exponents(int b) const;
  Poly deflate(int b) const;
  Poly shift(int k) const;  // multiply by x^k (k >= 0) or drop low terms (k < 0)
  Poly truncate(int n) const;  // mod x^n
  Poly derivative() const;
  Poly reverse(int n) const;   // x^n p(1/x)
  Poly compose(const Poly& g) const;
  Rational eval(const Rational& v) const;

  Poly monic() const;
  // Positive rational c with this/c primitive in Z[x] with positive leading coefficient.
  Rational content() const;
  Poly primitive() const;
  bool is_integral() const;
  // lcm of the coefficient denominators.
  Integer denominator_lcm() const;

  // With q > 1 the exponent of x^i is printed as i/q in lowest terms.
  std::string to_string(const std::string& var = "x", int q = 1) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly pow(const Poly& p, unsigned e);

// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Exact quotient; throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
// Returns (g, s, t) with s*a + t*b = g, g monic.
struct XGcd {
  Poly g, s, t;
};
XGcd xgcd(const Poly& a, const Poly& b);

Rational resultant(const Poly& a, const Poly& b);

// Integer helpers for primitive arithmetic.
std::vector<Integer> to_integer_coeffs(const Poly& p, Integer* scale = nullptr);
Poly from_integer_coeffs(const std::vector<Integer>& c);

}  // namespace msolve
