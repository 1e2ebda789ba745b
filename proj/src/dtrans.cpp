#include "msolve/dtrans.hpp"

#include <stdexcept>

#include "msolve/series.hpp"

namespace msolve {

namespace {

void check_order_two(const MahlerOperator& L) {
  if (L.order() != 2) throw std::invalid_argument("criterion needs an operator of order 2");
  if (L.coeff(1).is_zero()) throw std::invalid_argument("criterion needs l1 != 0");
}

struct R2Coeffs {
  RatFun c, e;
};

R2Coeffs r2_coeffs(const MahlerOperator& L) {
  check_order_two(L);
  const int b = L.radix();
  RatFun l0(L.coeff(0)), l1(L.coeff(1)), l2(L.coeff(2));
  RatFun c = mahler_pow(l0 / l1, b, 2) - mahler_pow(l1 / l2, b, 1) + (l2 / l1) * mahler_pow(l0 / l2, b, 1);
  RatFun e = l2 * l0 * mahler_pow(l0, b, 1) / (l1 * l1 * mahler_pow(l2, b, 1));
  return {c, e};
}

std::string list_blocks(const std::vector<SolutionBlock>& blocks) {
  std::string s;
  for (const auto& blk : blocks) s += (s.empty() ? "" : ", ") + block_to_string(blk);
  return s;
}

}  // namespace

MahlerOperator riccati_r2_operator(const MahlerOperator& L) {
  auto [c, e] = r2_coeffs(L);
  const int B = L.radix() * L.radix();
  return OreOp(B, {e, c, RatFun(Poly(1))}).to_mahler();
}

RatFun r2_expression(const MahlerOperator& L, const RatFun& u) {
  auto [c, e] = r2_coeffs(L);
  return u * mahler_pow(u, L.radix(), 2) + c * u + e;
}

TranscendenceVerdict independence_check(const MahlerOperator& L, const HPOptions& opts) {
  check_order_two(L);
  if (series_basis(L).dim() == 0) throw std::invalid_argument("criterion needs a nonzero power-series solution");
  TranscendenceVerdict v;
  v.r2 = riccati_r2_operator(L);
  HPResult r1 = riccati_hp_run(L, opts);
  HPResult r2 = riccati_hp_run(v.r2, opts);
  v.r1_solutions = r1.blocks;
  v.r2_solutions = r2.blocks;
  v.r1_unsupported = r1.unsupported;
  v.r2_unsupported = r2.unsupported;
  v.r1_stats = std::move(r1.stats);
  v.r2_stats = std::move(r2.stats);

  std::vector<std::string> why;
  if (!v.r1_solutions.empty()) why.push_back("(r1) has solutions " + list_blocks(v.r1_solutions));
  if (!v.r2_solutions.empty()) why.push_back("(r2) has solutions " + list_blocks(v.r2_solutions));
  if (!v.r1_unsupported.empty()) why.push_back("(r1) has irrational leading coefficients");
  if (!v.r2_unsupported.empty()) why.push_back("(r2) has irrational leading coefficients");
  if (why.empty()) {
    v.status = TranscendenceStatus::Independent;
    v.report = "f and Mf are differentially algebraically independent";
  } else {
    v.status = TranscendenceStatus::Inconclusive;
    for (const auto& w : why) v.report += (v.report.empty() ? "" : "; ") + w;
  }
  return v;
}

}  // namespace msolve
