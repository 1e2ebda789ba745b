#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msolve/poly.hpp"
#include "msolve/polymat.hpp"
#include "msolve/ratfun.hpp"

namespace msolve {

// L = sum_k coeff(k) M^k with M y(x) = y(x^b).
class MahlerOperator {
 public:
  MahlerOperator() = default;
  // Normalizes to a primitive operator: integer coefficients, content 1, no common
  // polynomial factor, positive leading coefficient of the leading term.
  MahlerOperator(int radix, std::vector<Poly> coeffs);

  int radix() const { return b_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  int degree() const;
  const Poly& coeff(int k) const { return c_[k]; }
  const std::vector<Poly>& coeffs() const { return c_; }

  // L(x^q, M): substitute x -> x^q in the coefficients.
  MahlerOperator ramify(int q) const;
  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const MahlerOperator& a, const MahlerOperator& b) {
    return a.b_ == b.b_ && a.c_ == b.c_;
  }

 private:
  int b_ = 2;
  std::vector<Poly> c_;
};

// Operators over Q(x) with right Euclidean division, used for lclm and factor checks.
class OreOp {
 public:
  OreOp() = default;
  OreOp(int radix, std::vector<RatFun> coeffs);
  explicit OreOp(const MahlerOperator& L);

  int radix() const { return b_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatFun& coeff(int k) const { return c_[k]; }
  const std::vector<RatFun>& coeffs() const { return c_; }

  friend OreOp operator+(const OreOp& a, const OreOp& b);
  friend OreOp operator-(const OreOp& a, const OreOp& b);
  friend OreOp operator*(const OreOp& a, const OreOp& b);
  // Clears denominators to a primitive polynomial operator.
  MahlerOperator to_mahler() const;

 private:
  void trim();
  int b_ = 2;
  std::vector<RatFun> c_;
};

// a = q * b + r with order(r) < order(b).
std::pair<OreOp, OreOp> right_divmod(const OreOp& a, const OreOp& b);
bool right_divides(const MahlerOperator& f, const MahlerOperator& L);
MahlerOperator compose(const MahlerOperator& A, const MahlerOperator& B);  // A*B, made primitive

// Apply M^k to a rational function or polynomial.
Poly mahler_pow(const Poly& p, int b, int k);
RatFun mahler_pow(const RatFun& f, int b, int k);

// Truncated power series c_0 + ... + c_{n-1} x^{n-1} + O(x^n).
struct TruncatedSeries {
  std::vector<Rational> c;
  int order() const { return static_cast<int>(c.size()); }
  Rational coeff(int i) const { return i < order() ? c[i] : Rational(0); }
  bool is_zero() const;
  int valuation() const;  // -1 if zero to this order
};

TruncatedSeries apply_operator(const MahlerOperator& L, const TruncatedSeries& f);
TruncatedSeries mahler_series(const TruncatedSeries& f, int b);  // f(x^b) to the same order

// Newton polygons.
enum class Side { Lower, Upper };

struct Vertex {
  int k;              // order index
  Integer abscissa;   // b^k
  int ordinate;       // valuation (lower) or degree (upper) of coeff(k)
};

struct Edge {
  Vertex left, right;
  Rational slope;
  Rational intercept;
  Poly charpoly;      // sum over points on the edge of coeff(k)[j] X^{k - left.k}
};

struct NewtonPolygon {
  Side side = Side::Lower;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;  // lower: increasing slope; upper: decreasing slope
};

NewtonPolygon newton_polygon(const MahlerOperator& L, Side side);

struct LambdaData {
  Rational lambda;
  bool viable = true;        // some admissible edge has a slope denominator coprime to b
  int q = 1;                 // ramification bound
  std::vector<Edge> admissible;
  int p = 0;                 // -p/q slope of the edge defining the transform
  Rational c;                // intercept of that edge
  Rational nu, mu;           // from the leftmost lower edge of L
  Rational nu_lambda, mu_lambda;
};

struct AdmissibleData {
  std::vector<LambdaData> lambdas;           // rational roots, increasing
  std::vector<Rational> zeros;               // Z(L) intersected with Q, increasing
  std::vector<Poly> unsupported;             // minimal polynomials of irrational lambdas
};

AdmissibleData admissible_data(const MahlerOperator& L);

// x^{-q c} L(x^q, lambda M) x^p, primitive. Updates ld.p / ld.c / nu_lambda / mu_lambda when the
// valuation of the series solutions shows that a further power of x can be factored.
MahlerOperator transform_lambda(const MahlerOperator& L, LambdaData& ld);
// The literal transform without the valuation adjustment.
MahlerOperator transform_lambda_raw(const MahlerOperator& L, const LambdaData& ld);

// Riccati residual sum_i coeff(i) u Mu ... M^{i-1}u.
RatFun riccati_residual(const MahlerOperator& L, const RatFun& u);
// Cleared form sum_i coeff(i) prod_{j<i} M^j P prod_{j=i}^{r-1} M^j Q.
Poly riccati_cleared(const MahlerOperator& L, const Poly& P, const Poly& Q);

MahlerOperator lclm(const MahlerOperator& L1, const MahlerOperator& L2);
MahlerOperator lclm(const std::vector<MahlerOperator>& ops);

// Minimal-order annihilator of y = R.Y for Y = A . MY.
MahlerOperator annihilator_from_system(const PolyMatrix& A, const std::vector<Poly>& R, int b);

struct DegreeBounds {
  Rational b_num, b_den, b_inf;
};
DegreeBounds degree_bounds(int b, int r, int d);

// First-order operator V M - U annihilating hypergeometric y with My/y = U/V.
MahlerOperator first_order(int b, const RatFun& u);

}  // namespace msolve
