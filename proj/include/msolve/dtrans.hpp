#pragma once

#include <string>
#include <vector>

#include "msolve/block.hpp"
#include "msolve/mahler.hpp"
#include "msolve/riccati_hp.hpp"

namespace msolve {

// Order-2 operator in radix b^2 whose Riccati equation is
//   u M^2u + (M^2(l0/l1) - M(l1/l2) + (l2/l1) M(l0/l2)) u + l2 l0 M(l0) / (l1^2 M(l2)) = 0,
// with M the radix-b operator. Its solutions are u = (l2/l1) M^2y/y for solutions y of L with M^2y/y
// ramified rational. Throws std::invalid_argument unless r = 2 and l1 != 0.
MahlerOperator riccati_r2_operator(const MahlerOperator& L);

// The left side of the equation above evaluated at u, built directly from l0, l1, l2.
RatFun r2_expression(const MahlerOperator& L, const RatFun& u);

enum class TranscendenceStatus { Independent, Inconclusive };

struct TranscendenceVerdict {
  TranscendenceStatus status = TranscendenceStatus::Inconclusive;
  MahlerOperator r2;
  std::vector<SolutionBlock> r1_solutions, r2_solutions;
  std::vector<Poly> r1_unsupported, r2_unsupported;
  HPStats r1_stats, r2_stats;
  std::string report;
};

// Solves both Riccati equations with HP. Independent iff both have no ramified rational solution
// and no irrational leading coefficient was left unexamined.
TranscendenceVerdict independence_check(const MahlerOperator& L, const HPOptions& opts = {});

}  // namespace msolve
