#include <gtest/gtest.h>

#include <random>

#include "msolve/factor.hpp"
#include "msolve/gpform.hpp"

using namespace msolve;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

GPForm form(const Poly& A, const Poly& B, const Poly& C, int r, int b) {
  GPForm f;
  f.A = A;
  f.B = B;
  f.C = C;
  f.r = r;
  f.b = b;
  return f;
}

}  // namespace

TEST(GPForm, RecurrenceExamples) {
  auto f = bgpf_from_rational(P({1, 1}), Poly(1), 3, 2);
  EXPECT_EQ(f.zeta, 1);
  EXPECT_EQ(f.A, P({1, 1}));
  EXPECT_EQ(f.B, Poly(1));
  EXPECT_EQ(f.C, Poly(1));
  for (int r = 1; r < 5; ++r) {
    auto g = bgpf_from_rational(Poly(1), Poly(1), r, 3);
    EXPECT_EQ(g.A, Poly(1));
    EXPECT_EQ(g.B, Poly(1));
    EXPECT_EQ(g.C, Poly(1));
  }
  auto h = bgpf_from_rational(Poly(1), P({-1, 1}), 2, 2);
  EXPECT_EQ(h.A, Poly(1));
  EXPECT_EQ(h.B, P({-1, 0, 1}));
  EXPECT_EQ(h.C, Poly(1));
  EXPECT_TRUE(check_bgpf(h, RatFun(Poly(1), P({-1, 1}))));
}

TEST(GPForm, RejectsBadInput) {
  EXPECT_THROW(bgpf_from_rational(P({1, 2}), Poly(1), 2, 2), std::invalid_argument);
  EXPECT_THROW(bgpf_from_rational(P({1, 1}), P({1, 1}), 2, 2), std::invalid_argument);
}

TEST(GPForm, NonUniqueForms) {
  RatFun u(P({1, 1}));
  EXPECT_TRUE(check_bgpf(form(P({1, 1}), Poly(1), Poly(1), 3, 2), u));
  EXPECT_TRUE(check_bgpf(form(Poly(1), Poly(1), P({-1, 0, 0, 0, 1}), 3, 2), u));
  EXPECT_FALSE(check_bgpf(form(P({0, 1}), P({0, 1}), Poly(1), 2, 2), RatFun(Poly(1))));
  // Right shape, wrong function.
  EXPECT_FALSE(check_bgpf(form(P({1, 1}), Poly(1), Poly(1), 3, 2), RatFun(P({2, 1}))));
}

TEST(GPForm, RandomReconstruction) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-2, 2), deg(0, 3), pick(0, 3), rr(2, 4), bb(2, 3);
  auto random_monic = [&]() {
    // Products of small factors and their Mahler images make gcds nontrivial.
    const Poly pool[] = {P({1, 1}), P({-1, 1}), P({1, 0, 1}), P({-1, 0, 1}), P({1, 1, 1}), P({0, 1})};
    Poly p(1);
    for (int i = deg(rng); i > 0; --i) p *= pool[pick(rng) + (coef(rng) > 0 ? 2 : 0)];
    if (coef(rng) == 2) {
      std::vector<Rational> c(deg(rng) + 2);
      for (auto& v : c) v = coef(rng);
      c.back() = 1;
      p *= Poly(c);
    }
    return p.monic();
  };
  int done = 0;
  while (done < 50) {
    Poly A = random_monic(), B = random_monic();
    Poly g = gcd(A, B);
    A = exact_div(A, g);
    B = exact_div(B, g);
    const int r = rr(rng), b = bb(rng);
    auto f = bgpf_from_rational(A, B, r, b);
    EXPECT_TRUE(check_bgpf(f, RatFun(A, B))) << A.to_string() << " / " << B.to_string() << " r=" << r;
    // Stationarity: far enough, A stays and B, C follow M.
    // deg A bounds the number of nontrivial gcd steps.
    if (A.deg() <= 6) {
      const int k = A.deg() + 1;
      auto f1 = bgpf_from_rational(A, B, k, 2);
      auto f2 = bgpf_from_rational(A, B, k + 1, 2);
      EXPECT_EQ(f1.A, f2.A);
      EXPECT_EQ(f1.B.compose_pow(2), f2.B);
      EXPECT_EQ(f1.C.compose_pow(2), f2.C);
    }
    ++done;
  }
}
