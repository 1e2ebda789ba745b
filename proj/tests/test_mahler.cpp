#include <gtest/gtest.h>

#include <random>

#include "msolve/factor.hpp"
#include "msolve/mahler.hpp"
#include "msolve/series.hpp"

using namespace msolve;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

MahlerOperator op(int b, std::vector<Poly> c) { return MahlerOperator(b, std::move(c)); }

// Brute-force lower/upper hull: a support point is a vertex iff it is not above (below) a
// segment between two other points; edge slopes are recomputed from consecutive vertices.
std::vector<std::pair<long, long>> brute_hull(std::vector<std::pair<long, long>> pts, bool lower) {
  std::vector<std::pair<long, long>> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool vertex = true;
    for (std::size_t a = 0; a < pts.size() && vertex; ++a)
      for (std::size_t c = 0; c < pts.size() && vertex; ++c) {
        if (a == i || c == i) continue;
        if (!(pts[a].first < pts[i].first && pts[i].first < pts[c].first)) continue;
        // value of the segment at pts[i].first, compared without division
        long dx = pts[c].first - pts[a].first;
        long num = pts[a].second * (pts[c].first - pts[i].first) + pts[c].second * (pts[i].first - pts[a].first);
        long lhs = pts[i].second * dx;
        if (lower ? lhs >= num : lhs <= num) vertex = false;
      }
    if (vertex) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace

TEST(MahlerOperator, NormalizesToPrimitive) {
  MahlerOperator L = op(2, {P({2, 2}), P({4, 4}) * Rational(1, 3)});
  EXPECT_EQ(L.coeff(0), Poly(3));
  EXPECT_EQ(L.coeff(1), Poly(2));
  EXPECT_THROW(op(2, {Poly(), Poly(1)}), std::invalid_argument);
}

TEST(NewtonPolygon, LowerWithTwoEdges) {
  // x - M + M^3, b = 2
  auto np = newton_polygon(op(2, {P({0, 1}), Poly(-1), Poly(), Poly(1)}), Side::Lower);
  ASSERT_EQ(np.edges.size(), 2u);
  EXPECT_EQ(np.edges[0].slope, Rational(-1));
  EXPECT_EQ(np.edges[0].charpoly.monic(), P({-1, 1}));
  EXPECT_EQ(np.edges[0].charpoly, P({1, -1}));
  EXPECT_EQ(np.edges[1].slope, Rational(0));
  EXPECT_EQ(np.edges[1].charpoly, P({-1, 0, 1}));
}

TEST(NewtonPolygon, BaumSweetSingleEdge) {
  auto np = newton_polygon(op(2, {Poly(-1), P({0, 1}), Poly(1)}), Side::Lower);
  ASSERT_EQ(np.edges.size(), 1u);
  EXPECT_EQ(np.edges[0].left.abscissa, 1);
  EXPECT_EQ(np.edges[0].right.abscissa, 4);
  EXPECT_EQ(np.edges[0].slope, Rational(0));
  EXPECT_EQ(np.edges[0].charpoly, P({-1, 0, 1}));
}

TEST(NewtonPolygon, ConstantOperatorHasNoEdges) {
  auto np = newton_polygon(op(2, {Poly(3)}), Side::Lower);
  EXPECT_EQ(np.vertices.size(), 1u);
  EXPECT_TRUE(np.edges.empty());
}

TEST(NewtonPolygon, MatchesBruteForceHull) {
  std::mt19937 rng(21);
  for (int it = 0; it < 60; ++it) {
    int b = 2 + rng() % 3, r = 1 + rng() % 4;
    std::vector<Poly> c(r + 1);
    for (int k = 0; k <= r; ++k) {
      if (k > 0 && k < r && rng() % 3 == 0) continue;
      int v = rng() % 6, d = v + rng() % 5;
      c[k] = Poly::x(v) + Poly::x(d) * Rational(2);
    }
    MahlerOperator L = op(b, c);
    for (bool lower : {true, false}) {
      std::vector<std::pair<long, long>> pts;
      long bk = 1;
      for (int k = 0; k <= L.order(); ++k, bk *= b)
        if (!L.coeff(k).is_zero()) pts.push_back({bk, lower ? L.coeff(k).val() : L.coeff(k).deg()});
      auto expect = brute_hull(pts, lower);
      auto np = newton_polygon(L, lower ? Side::Lower : Side::Upper);
      ASSERT_EQ(np.vertices.size(), expect.size());
      for (std::size_t i = 0; i < expect.size(); ++i) {
        EXPECT_EQ(np.vertices[i].abscissa, expect[i].first);
        EXPECT_EQ(np.vertices[i].ordinate, expect[i].second);
      }
      for (std::size_t e = 1; e < np.edges.size(); ++e) {
        if (lower) EXPECT_LT(np.edges[e - 1].slope, np.edges[e].slope);
        else EXPECT_GT(np.edges[e - 1].slope, np.edges[e].slope);
      }
      // Edge data is invariant under M -> lambda M up to scaling of charpoly coefficients.
      std::vector<Poly> scaled;
      Rational lam(3, 2), lk = 1;
      for (int k = 0; k <= L.order(); ++k, lk *= lam) scaled.push_back(L.coeff(k) * lk);
      auto np2 = newton_polygon(MahlerOperator(b, scaled), lower ? Side::Lower : Side::Upper);
      ASSERT_EQ(np2.edges.size(), np.edges.size());
      for (std::size_t e = 0; e < np.edges.size(); ++e) EXPECT_EQ(np2.edges[e].slope, np.edges[e].slope);
    }
  }
}

TEST(Admissible, NoTwosInTernary) {
  MahlerOperator L = op(2, {P({0, 1}), -P({1, 3, 4}), P({1, 0, 1}) * P({1, 0, 1}) * Rational(3)});
  auto ad = admissible_data(L);
  ASSERT_EQ(ad.lambdas.size(), 2u);
  EXPECT_EQ(ad.lambdas[0].lambda, Rational(1, 3));
  EXPECT_EQ(ad.lambdas[1].lambda, Rational(1));
  EXPECT_EQ(ad.lambdas[0].q, 1);
  EXPECT_EQ(ad.lambdas[1].q, 1);
}

TEST(Admissible, BaumSweet) {
  auto ad = admissible_data(op(2, {Poly(-1), P({0, 1}), Poly(1)}));
  ASSERT_EQ(ad.lambdas.size(), 2u);
  EXPECT_EQ(ad.lambdas[0].lambda, Rational(-1));
  EXPECT_EQ(ad.lambdas[1].lambda, Rational(1));
}

TEST(Admissible, MMinusOne) {
  auto ad = admissible_data(op(2, {Poly(-1), Poly(1)}));
  ASSERT_EQ(ad.lambdas.size(), 1u);
  EXPECT_EQ(ad.lambdas[0].lambda, Rational(1));
  EXPECT_EQ(ad.lambdas[0].q, 1);
}

TEST(Admissible, IrrationalRootsReported) {
  // -2 + M^2 has slope-0 edge with characteristic polynomial X^2 - 2.
  auto ad = admissible_data(op(2, {Poly(-2), Poly(), Poly(1)}));
  EXPECT_TRUE(ad.lambdas.empty());
  ASSERT_EQ(ad.unsupported.size(), 1u);
  EXPECT_EQ(ad.unsupported[0], P({-2, 0, 1}));
}

TEST(TransformLambda, GeneralPattern) {
  // L = lambda0 x^omega - M + M^r with b = 4, omega = 10, r = 4 and lambda0 = 1, 2.
  for (long l0 : {1L, 2L}) {
    MahlerOperator L = op(4, {P({0}) + Poly::x(10) * Rational(l0), Poly(-1), Poly(), Poly(), Poly(1)});
    auto ad = admissible_data(L);
    LambdaData* ld = nullptr;
    for (auto& d : ad.lambdas)
      if (d.lambda == l0) ld = &d;
    ASSERT_NE(ld, nullptr);
    MahlerOperator T = transform_lambda(L, *ld);
    Rational lr = 1;
    for (int i = 0; i < 3; ++i) lr *= l0;
    MahlerOperator expect = op(4, {Poly(1), Poly(-1), Poly(), Poly(), Poly::x((256 - 4) * 10) * lr});
    EXPECT_EQ(T, expect);
    EXPECT_EQ(ld->q, 3);
    EXPECT_EQ(ld->p, 10);
    auto db = degree_bounds(4, 4, T.degree());
    EXPECT_EQ(db.b_num, Rational(315, 2));
    EXPECT_EQ(db.b_num.get_num() / db.b_num.get_den(), 157);
  }
}

TEST(TransformLambda, IdentityForBaumSweet) {
  MahlerOperator L = op(2, {Poly(-1), P({0, 1}), Poly(1)});
  auto ad = admissible_data(L);
  for (auto& ld : ad.lambdas) {
    if (ld.lambda != 1) continue;
    EXPECT_EQ(transform_lambda(L, ld), L);
    EXPECT_EQ(ld.p, 0);
    EXPECT_EQ(ld.q, 1);
  }
}

TEST(TransformLambda, RescalesForOneThird) {
  MahlerOperator L = op(2, {P({0, 1}), -P({1, 3, 4}), P({1, 0, 1}) * P({1, 0, 1}) * Rational(3)});
  auto ad = admissible_data(L);
  LambdaData ld = ad.lambdas[0];
  MahlerOperator T = transform_lambda(L, ld);
  // x^{-c} L(x, M/3) x^p with p from the rightmost admissible edge.
  MahlerOperator direct = op(2, {L.coeff(0), L.coeff(1) / Rational(3), L.coeff(2) / Rational(9)});
  auto ad2 = admissible_data(direct);
  EXPECT_EQ(T.order(), 2);
  EXPECT_TRUE(T.coeff(0).coeff(0) != 0 || T.coeff(1).coeff(0) != 0 || T.coeff(2).coeff(0) != 0);
  for (const auto& d : admissible_data(T).lambdas)
    if (d.lambda == 1) EXPECT_EQ(d.q, 1);
}

TEST(ApplyOperator, ThueMorse) {
  MahlerOperator L = op(2, {Poly(-1), P({1, -1})});
  TruncatedSeries f{{1, -1, -1, 1, -1, 1, 1, -1}};
  EXPECT_TRUE(apply_operator(L, f).is_zero());
}

TEST(ApplyOperator, BaumSweetSequence) {
  // a_n = 1 iff the binary expansion of n has no block of zeros of odd length.
  auto bs = [](long n) {
    if (n == 0) return 1;
    int run = 0;
    while (n) {
      if ((n & 1) == 0) {
        ++run;
      } else {
        if (run % 2) return 0;
        run = 0;
      }
      n >>= 1;
    }
    return run % 2 ? 0 : 1;
  };
  TruncatedSeries f;
  for (int n = 0; n < 200; ++n) f.c.emplace_back(bs(n));
  EXPECT_TRUE(apply_operator(op(2, {Poly(-1), P({0, 1}), Poly(1)}), f).is_zero());
}

TEST(ApplyOperator, CommutationWithX) {
  std::mt19937 rng(2);
  MahlerOperator L = op(3, {P({1, 2}), P({0, -1, 3}), P({5})});
  TruncatedSeries f;
  for (int i = 0; i < 40; ++i) f.c.emplace_back(static_cast<int>(rng() % 7) - 3);
  // (L x) f = L (x f) versus x^{b^k} acting: L x = sum l_k x^{b^k} M^k.
  std::vector<Poly> lx;
  long bk = 1;
  for (int k = 0; k <= L.order(); ++k, bk *= 3) lx.push_back(L.coeff(k) * Poly::x(bk));
  TruncatedSeries xf;
  xf.c.push_back(0);
  xf.c.insert(xf.c.end(), f.c.begin(), f.c.end() - 1);
  auto a = apply_operator(L, xf);
  // The normalized operator has the common factor x removed, so compare x * (its action).
  auto b = apply_operator(MahlerOperator(3, lx), f);
  EXPECT_EQ(a.c[0], 0);
  for (int i = 0; i + 1 < a.order(); ++i) EXPECT_EQ(a.c[i + 1], b.c[i]);
}

TEST(Riccati, SternBrocotRadixTwo) {
  MahlerOperator L = op(2, {P({0, 1}), -P({1, 1, 2}), P({1, 0, 1, 0, 1})});
  EXPECT_TRUE(riccati_residual(L, RatFun(P({0, 1}), P({1, 1, 1}))).is_zero());
  EXPECT_TRUE(riccati_cleared(L, P({0, 1}), P({1, 1, 1})).is_zero());
}

TEST(Riccati, Trivial) {
  EXPECT_TRUE(riccati_residual(op(2, {Poly(-1), Poly(1)}), RatFun(Poly(1))).is_zero());
  auto r = riccati_residual(op(2, {Poly(-1), P({0, 1}), Poly(1)}), RatFun(Poly(1)));
  EXPECT_EQ(r, RatFun(P({0, 1})));
}

TEST(Operators, SternBrocotFactorization) {
  MahlerOperator L2 = op(2, {P({0, -1}), P({1, 1, 1})});
  MahlerOperator L2p = op(2, {P({0, 1}), -P({1, 1, 2}), P({1, 0, 1, 0, 1})});
  EXPECT_EQ(compose(op(2, {Poly(1), Poly(-1)}), L2), L2p);
  EXPECT_TRUE(right_divides(L2, L2p));
}

TEST(Lclm, ParityPair) {
  MahlerOperator a = op(2, {-P({1, -2}), P({1, 0, -2})});
  MahlerOperator b = op(2, {-P({1, -3}), P({1, 0, -3})});
  MahlerOperator L = lclm(a, b);
  EXPECT_EQ(L.order(), 2);
  EXPECT_EQ(L.coeff(2), P({1, 0, 0, 0, -5, 0, 0, 0, 6}));
  EXPECT_TRUE(right_divides(a, L));
  EXPECT_TRUE(right_divides(b, L));
}

TEST(Lclm, SelfAndSimple) {
  MahlerOperator a = op(2, {Poly(-1), Poly(1)});
  EXPECT_EQ(lclm(a, a), a);
  MahlerOperator b = op(2, {P({0, -1}), Poly(1)});
  MahlerOperator L = lclm(a, b);
  EXPECT_EQ(L.order(), 2);
  EXPECT_TRUE(right_divides(a, L));
  EXPECT_TRUE(right_divides(b, L));
}

TEST(Lclm, RandomFirstOrderFactorsDivide) {
  std::mt19937 rng(17);
  for (int it = 0; it < 10; ++it) {
    std::vector<MahlerOperator> f;
    for (int i = 0; i < 3; ++i) {
      Poly u = P({static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 5) - 2});
      Poly v = P({static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 3)});
      f.push_back(first_order(2, RatFun(u, v)));
    }
    MahlerOperator L = lclm(f);
    for (const auto& g : f) EXPECT_TRUE(right_divides(g, L));
  }
}

TEST(Annihilator, SternBrocotSystem) {
  PolyMatrix A{{Poly(1), P({0, 1})}, {P({1, -1}), P({1, 2})}};
  MahlerOperator L = annihilator_from_system(A, {Poly(1), Poly()}, 2);
  EXPECT_EQ(L, op(2, {P({0, 1}), -P({1, 1, 2}), P({1, 0, 1, 0, 1})}));
}

TEST(Annihilator, Trivial) {
  MahlerOperator L = annihilator_from_system({{Poly(1)}}, {Poly(1)}, 2);
  EXPECT_EQ(L, op(2, {Poly(-1), Poly(1)}));
}

TEST(Annihilator, TernaryParitySystem) {
  Poly x = P({0, 1}), x2 = P({0, 0, 1});
  PolyMatrix A{{1, x, 0, x2}, {x, 1, x2, 0}, {0, x2, 1, x}, {x2, 0, x, 1}};
  MahlerOperator L = annihilator_from_system(A, {Poly(1), Poly(), Poly(), Poly()}, 3);
  EXPECT_EQ(L.order(), 4);
  EXPECT_EQ(L.degree(), 258);
}

TEST(DegreeBounds, PublishedValues) {
  auto a = degree_bounds(3, 4, 258);
  EXPECT_EQ(a.b_num, Rational(344, 9));
  EXPECT_EQ(a.b_den, Rational(86, 3));
  EXPECT_EQ(a.b_inf, Rational(344, 9));
  auto z = degree_bounds(2, 1, 0);
  EXPECT_EQ(z.b_num, 0);
  EXPECT_EQ(z.b_den, 0);
  auto two = degree_bounds(2, 3, 5);
  EXPECT_EQ(two.b_num, 10);
  EXPECT_EQ(two.b_den, Rational(35, 4));
  for (int b = 2; b <= 5; ++b)
    for (int r = 1; r <= 4; ++r)
      for (int d = 0; d < 20; ++d) {
        EXPECT_LE(degree_bounds(b, r, d).b_inf, degree_bounds(b, r, d + 1).b_inf);
      }
}
