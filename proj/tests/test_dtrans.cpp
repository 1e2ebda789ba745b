#include <gtest/gtest.h>

#include <random>

#include "msolve/corpus.hpp"
#include "msolve/dtrans.hpp"
#include "msolve/series.hpp"

using namespace msolve;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

RatFun random_ratfun(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-5, 5), d(0, 3);
  auto poly = [&](bool monic) {
    std::vector<Rational> v(d(rng) + 1);
    for (auto& e : v) e = c(rng);
    if (monic) v.back() = 1;
    return Poly(v);
  };
  Poly n = poly(false);
  if (n.is_zero()) n = Poly(1);
  return RatFun(n, poly(true));
}

// Radix-b^2 equation M^4y + A M^2y + B y = 0 obtained by eliminating My and M^3y from L y = 0.
struct Elimination {
  RatFun A, B;
};

Elimination eliminate(const MahlerOperator& L) {
  const int b = L.radix();
  auto M = [&](const RatFun& f, int k) { return mahler_pow(f, b, k); };
  RatFun l0(L.coeff(0)), l1(L.coeff(1)), l2(L.coeff(2));
  RatFun A = M(l0, 2) / M(l2, 2) - M(l1, 2) * M(l1, 1) / (M(l2, 2) * M(l2, 1)) +
             M(l1, 2) * M(l0, 1) * l2 / (l1 * M(l2, 1) * M(l2, 2));
  RatFun B = M(l1, 2) * M(l0, 1) * l0 / (l1 * M(l2, 1) * M(l2, 2));
  return {A, B};
}

bool has_unit_member(const std::vector<SolutionBlock>& blocks, const RatFun& u) {
  for (const auto& b : blocks)
    if (b.q == 1 && b.s() == 1 && specialize_unit(b.u, 0) == u) return true;
  return false;
}

}  // namespace

TEST(R2Operator, DilcherStolarskyRadixAndDegree) {
  auto R = riccati_r2_operator(corpus::dilcher_stolarsky());
  EXPECT_EQ(R.radix(), 16);
  EXPECT_EQ(R.order(), 2);
  EXPECT_EQ(R.degree(), 50);
}

TEST(R2Operator, ConstantCoefficients) {
  auto R = riccati_r2_operator(MahlerOperator(3, {Poly(1), Poly(1), Poly(1)}));
  EXPECT_EQ(R.radix(), 9);
  EXPECT_EQ(R.degree(), 0);
  // c = 1 - 1 + 1, e = 1.
  EXPECT_EQ(R, MahlerOperator(9, {Poly(1), Poly(1), Poly(1)}));
}

TEST(R2Operator, MatchesSymbolicExpression) {
  std::mt19937 rng(11);
  for (const auto& e : corpus::order_two_entries()) {
    auto R = riccati_r2_operator(e.op);
    for (int t = 0; t < 50; ++t) {
      RatFun u = random_ratfun(rng);
      EXPECT_EQ(riccati_residual(R, u), RatFun(R.coeff(2)) * r2_expression(e.op, u)) << e.name;
    }
  }
}

TEST(R2Operator, AgreesWithElimination) {
  std::mt19937 rng(12);
  for (const auto& e : corpus::order_two_entries()) {
    const MahlerOperator& L = e.op;
    const int b = L.radix();
    auto [A, B] = eliminate(L);
    RatFun t = RatFun(L.coeff(1)) / RatFun(L.coeff(2));
    RatFun Nt = mahler_pow(t, b, 2);
    for (int k = 0; k < 20; ++k) {
      RatFun u = random_ratfun(rng);
      RatFun v = t * u;
      RatFun elim = v * mahler_pow(v, b, 2) + A * v + B;
      EXPECT_EQ(r2_expression(L, u) * t * Nt, elim) << e.name;
    }
    // The eliminated equation annihilates the series solutions of L.
    auto S = series_basis(L, 200);
    ASSERT_GT(S.dim(), 0) << e.name;
    MahlerOperator E = OreOp(b * b, {B, A, RatFun(Poly(1))}).to_mahler();
    for (const auto& z : S.elements) {
      TruncatedSeries r = apply_operator(E, z);
      EXPECT_EQ(r.order(), 200);
      EXPECT_TRUE(r.is_zero()) << e.name;
    }
  }
}

TEST(R2Operator, RejectsBadInput) {
  EXPECT_THROW(riccati_r2_operator(MahlerOperator(2, {Poly(1), Poly(), Poly::x()})), std::invalid_argument);
  EXPECT_THROW(riccati_r2_operator(MahlerOperator(2, {Poly(1), Poly(1), Poly(1), Poly(1)})), std::invalid_argument);
  EXPECT_THROW(independence_check(MahlerOperator(2, {Poly(1), Poly(), Poly::x()})), std::invalid_argument);
}

TEST(Independence, ClassicalEntries) {
  for (const auto& e : corpus::order_two_entries()) {
    auto v = independence_check(e.op);
    const bool reducible = e.name == "Stern_Brocot_b2" || e.name == "Stern_Brocot_b4" || e.name == "no_2s_in_3_exp";
    if (reducible) {
      EXPECT_EQ(v.status, TranscendenceStatus::Inconclusive) << e.name;
      EXPECT_FALSE(v.r1_solutions.empty()) << e.name;
    } else {
      EXPECT_EQ(v.status, TranscendenceStatus::Independent) << e.name;
      EXPECT_TRUE(v.r1_solutions.empty() && v.r2_solutions.empty()) << e.name;
    }
  }
}

TEST(Independence, SternBrocotWitness) {
  auto v = independence_check(corpus::stern_brocot_b2());
  EXPECT_EQ(v.status, TranscendenceStatus::Inconclusive);
  ASSERT_EQ(v.r1_solutions.size(), 1u);
  EXPECT_TRUE(has_unit_member(v.r1_solutions, RatFun(Poly::x(), P({1, 1, 1}))));
  EXPECT_NE(v.report.find("(r1)"), std::string::npos);
}

TEST(Independence, ImprimitiveSystem) {
  // y1, y2 with M y1 = y2, M y2 = (1 + x) y1; L annihilates y1 + y2. The lines are swapped by M, so
  // (r1) has no solution while M^2 y_i / y_i = 1 + x, 1 + x^2 give (r2) solutions (l2/l1) M^2y/y.
  MahlerOperator L(2, {P({0, -1, -1}), P({-1, 1}), Poly(1)});
  auto v = independence_check(L);
  EXPECT_EQ(v.status, TranscendenceStatus::Inconclusive);
  EXPECT_TRUE(v.r1_solutions.empty());
  ASSERT_EQ(v.r2_solutions.size(), 2u);
  EXPECT_TRUE(has_unit_member(v.r2_solutions, RatFun(P({1, 1}), P({-1, 1}))));
  EXPECT_TRUE(has_unit_member(v.r2_solutions, RatFun(P({1, 0, 1}), P({-1, 1}))));
}

TEST(Independence, NeedsSeriesSolution) {
  MahlerOperator L(2, {Poly(1), Poly(1), Poly(1)});
  ASSERT_EQ(series_basis(L).dim(), 0);
  EXPECT_THROW(independence_check(L), std::invalid_argument);
}
