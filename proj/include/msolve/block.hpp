#pragma once

#include <map>
#include <string>
#include <vector>

#include "msolve/mahler.hpp"
#include "msolve/poly.hpp"
#include "msolve/ratfun.hpp"

namespace msolve {

// num = sum_i g_i num[i](x), den = sum_i g_i den[i](x).
struct ParamRational {
  std::vector<Poly> num, den;
  int params() const { return static_cast<int>(num.size()); }
};

RatFun specialize(const ParamRational& u, const std::vector<Rational>& g);
RatFun specialize_unit(const ParamRational& u, int i);

// Removes the common polynomial content and puts the parameter basis in reduced echelon form,
// denominator coefficients first, lowest degree first. Dependent parameters are dropped.
ParamRational normalize(const ParamRational& u);

// Degrees after normalization: max over the parameter basis.
int num_degree(const ParamRational& u);
int den_degree(const ParamRational& u);

// Every member of `small` is a member of `big`. Both families must be injective in g.
bool family_contains(const ParamRational& big, const ParamRational& small);

// Homogeneous polynomials in g_1..g_v with coefficients in Q[x].
class ParamPoly {
 public:
  explicit ParamPoly(int v) : v_(v) {}
  static ParamPoly constant(int v, const Poly& p);
  static ParamPoly linear(const std::vector<Poly>& forms);

  int params() const { return v_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Poly>& terms() const { return terms_; }

  ParamPoly& operator+=(const ParamPoly& o);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly times_linear(const std::vector<Poly>& forms) const;
  ParamPoly scale(const Poly& p) const;

 private:
  int v_;
  std::map<std::vector<int>, Poly> terms_;
};

// The cleared Riccati form with u substituted, as a polynomial in (x; g).
ParamPoly riccati_cleared_param(const MahlerOperator& L, const ParamRational& u);
bool riccati_vanishes(const MahlerOperator& L, const ParamRational& u);

// A family of solutions u of the Riccati equation, in the variable x^{1/q}.
struct SolutionBlock {
  Rational lambda;
  int q = 1;
  ParamRational u;
  int s() const { return u.params(); }
};

Rational leading_ratio(const RatFun& u);  // ratio of lowest-order coefficients
SolutionBlock make_block(const ParamRational& u, int q);
// Rewrite in the variable x^{1/q} with q a multiple of the block's q.
SolutionBlock reramify(const SolutionBlock& blk, int q);
// Lowers q when every exponent allows it.
SolutionBlock simplify_ramification(const SolutionBlock& blk);

// Drops blocks whose family is contained in another, then sorts by (lambda, valuation, degree).
std::vector<SolutionBlock> dedupe_blocks(std::vector<SolutionBlock> blocks);
void sort_blocks(std::vector<SolutionBlock>& blocks);
// Same families, block for block, after dedupe.
bool same_blocks(const std::vector<SolutionBlock>& a, const std::vector<SolutionBlock>& b);

std::string param_to_string(const ParamRational& u, const std::string& var = "x", int q = 1);
std::string block_to_string(const SolutionBlock& blk);

}  // namespace msolve
