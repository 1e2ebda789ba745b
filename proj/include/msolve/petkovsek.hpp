#pragma once

#include <vector>

#include "msolve/block.hpp"
#include "msolve/factor.hpp"
#include "msolve/mahler.hpp"

namespace msolve {

struct PetkovsekStats {
  long pairs = 0;              // (A, B) pairs reaching the polynomial solving stage
  long triples = 0;            // (B, A, zeta) triples processed
  long candidates = 0;         // blocks before dedupe
  long blocks = 0;             // blocks after dedupe
};

struct CandidateTuple {
  Rational zeta;
  Poly A, B;
  int Delta = -1;
  std::vector<Poly> Cbasis;
};

// sum_k M^{r-1} l_k * prod_{j<k} M^{r-1+j} A * prod_{j=k}^{r-1} M^j B * M^k, in the variable t,
// with the common factor M^{r-1}(A B) removed. Slopes and zeros are unaffected.
MahlerOperator ltilde(const MahlerOperator& L, const Poly& A, const Poly& B);

// Basis of {C in Q[t] : deg C <= Delta, sum_k zeta^k coeff(k) C(t^{b^k}) = 0}.
std::vector<Poly> poly_solutions_bounded(const MahlerOperator& Lt, const Rational& zeta, int Delta);

// irred(l0) intersected with {q, sqrtG q, ..., sqrtG^{r-1} q}.
std::vector<Poly> forbidden_factors(const Poly& q, const FactoredPoly& l0, int r, int b);

struct DivisorPair {
  Poly A, B;
};

// Pairs (A | l0, B | lr) with gcd(M^i A, B) = 1 for i < r, in the order used by the basic search.
std::vector<DivisorPair> coprime_pairs(const MahlerOperator& L);
// Same, pruned by the redundancy predicates: B outer loop, A inner.
std::vector<DivisorPair> admissible_pairs(const MahlerOperator& L);

// Rational solutions (q = 1).
std::vector<SolutionBlock> riccati_bp(const MahlerOperator& L, PetkovsekStats* stats = nullptr);
std::vector<SolutionBlock> riccati_ip(const MahlerOperator& L, PetkovsekStats* stats = nullptr);

enum class PetkovsekMethod { Basic, Improved };
// Ramified rational solutions through L(x^q, M) with q the lcm of the ramification bounds.
std::vector<SolutionBlock> riccati_ramified(const MahlerOperator& L, PetkovsekMethod method,
                                            PetkovsekStats* stats = nullptr);

// Turns a tuple with a nonempty C basis into a block in x.
SolutionBlock block_from_tuple(const MahlerOperator& L, const CandidateTuple& t);

}  // namespace msolve
