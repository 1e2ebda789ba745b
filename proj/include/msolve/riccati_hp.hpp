#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "msolve/arrangement.hpp"
#include "msolve/block.hpp"
#include "msolve/mahler.hpp"
#include "msolve/orderbasis.hpp"

namespace msolve {

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficients in x of the (rho+2)-minors of W augmented by (a, 0) and (0, a); quadratic forms in
// a_1..a_N, zero and repeated entries removed.
std::vector<MultiPoly> minor_system(const FilteredMatrix& W, int N);

// The parametrized candidate when rho = 2N - 1, with g = a.
ParamRational candidate_full(const FilteredMatrix& W, int N);

struct RetrySignal {
  std::string reason;
};

// Candidate P/Q = Delta_{rho+1} / Delta_{rho+2} on the component a = g S.
std::variant<ParamRational, RetrySignal> candidate_component(const FilteredMatrix& W, const RatMatrix& S);

enum class Verdict { Accepted, RejectedDegree, RejectedResidual };
Verdict validate_candidate(const MahlerOperator& L_lambda, const ParamRational& cand, const DegreeBounds& bounds);

struct HPOptions {
  int sigma_cap = 20000;
  double growth = 1.6180339887498949;
};

// One line per sigma visited.
struct HPTraceEntry {
  Rational lambda;
  int sigma = 0;
  int N = 0;
  int rho = 0;
  std::string outcome;
};

struct HPStats {
  long iterations = 0;
  long candidates = 0;
  long rejected = 0;
  long retries = 0;
  std::vector<HPTraceEntry> trace;
};

struct HPResult {
  std::vector<SolutionBlock> blocks;
  std::vector<Poly> unsupported;  // minimal polynomials of irrational leading coefficients
  HPStats stats;
};

// Ramified rational solutions with rational leading coefficient. Throws ResourceLimit when sigma
// would exceed the cap.
HPResult riccati_hp_run(const MahlerOperator& L, const HPOptions& opts = {});
std::vector<SolutionBlock> riccati_hp(const MahlerOperator& L);

}  // namespace msolve
