#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "msolve/poly.hpp"
#include "msolve/polymat.hpp"

namespace msolve {

using Monomial = std::vector<int>;

enum class MonomialOrder { Lex, GrevLex };

// a > b in the given order; variable 0 is the largest.
bool monomial_greater(const Monomial& a, const Monomial& b, MonomialOrder order);

// Sparse polynomial over Q in the variables a_1..a_n.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : n_(nvars) {}
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly var(int nvars, int i, const Rational& c = 1);
  // sum_i c[i] a_{i+1}
  static MultiPoly linear(const std::vector<Rational>& c);

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  int degree() const;  // total degree, -1 for zero
  bool is_homogeneous() const;
  bool is_linear_form() const;  // homogeneous of degree 1
  // Coefficients of a polynomial of degree <= 1, constant term dropped.
  std::vector<Rational> linear_coeffs() const;
  std::vector<int> variables() const;

  const std::map<Monomial, Rational>& terms() const { return t_; }
  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  Rational eval(const std::vector<Rational>& a) const;
  // a_i -> images[i]; all images share one variable count.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  MultiPoly pow(unsigned e) const;

  // Scaled so that the leading coefficient in the given order is 1.
  MultiPoly monic(MonomialOrder order) const;
  std::pair<Monomial, Rational> leading_term(MonomialOrder order) const;

  std::string to_string(const std::string& var = "a") const;

 private:
  int n_;
  std::map<Monomial, Rational> t_;
};

// Normal form of f modulo a Gröbner basis.
MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& basis, MonomialOrder order);

// Reduced Gröbner basis, monic, sorted by increasing leading monomial. Zero generators are ignored;
// an empty result is the zero ideal and {1} the unit ideal.
std::vector<MultiPoly> groebner(const std::vector<MultiPoly>& gens, MonomialOrder order);

bool in_ideal(const MultiPoly& f, const std::vector<MultiPoly>& gb, MonomialOrder order);
// f vanishes on the variety of gens over the algebraic closure.
bool in_radical(const MultiPoly& f, const std::vector<MultiPoly>& gens);

// All linear factors over Q of a nonzero homogeneous polynomial: f = cofactor * prod l^m,
// each l with first nonzero coefficient 1, cofactor without linear factors.
struct LinearFactorization {
  std::vector<std::pair<MultiPoly, int>> factors;
  MultiPoly cofactor;
};
LinearFactorization linear_factors(const MultiPoly& f);

// The subspace {a : forms(a) = 0} = row space of S.
struct LinearComponent {
  std::vector<MultiPoly> forms;  // reduced echelon, independent
  RatMatrix S;                   // v x n, reduced echelon
  int nvars = 0;
  int dim() const { return static_cast<int>(S.size()); }
};

struct NonLinearSignal {
  std::string reason;
};

using Decomposition = std::variant<std::vector<LinearComponent>, NonLinearSignal>;

// Variety of homogeneous gens in Q-bar^n as an irredundant union of subspaces defined over Q,
// or a signal that some part could not be certified linear over Q. The zero subspace is returned
// only when it is the whole variety.
Decomposition linear_decompose(const std::vector<MultiPoly>& gens, int nvars);

// Row basis S of the component; nullopt when the component is {0}.
std::optional<RatMatrix> parametrize(const LinearComponent& comp);
// Component cut out by linear forms, with S filled in.
LinearComponent make_component(const std::vector<MultiPoly>& forms, int nvars);
// Every point of a lies in b.
bool component_contains(const LinearComponent& b, const LinearComponent& a);

std::string component_to_string(const LinearComponent& c);

}  // namespace msolve
