#include <gtest/gtest.h>

#include "msolve/mahler.hpp"
#include "msolve/series.hpp"

using namespace msolve;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

int thue_morse_sign(long n) { return __builtin_popcountl(n) % 2 ? -1 : 1; }

MahlerOperator af_operator() {
  Poly x = P({0, 1}), x2 = P({0, 0, 1});
  PolyMatrix A{{1, x, 0, x2}, {x, 1, x2, 0}, {0, x2, 1, x}, {x2, 0, x, 1}};
  return annihilator_from_system(A, {Poly(1), Poly(), Poly(), Poly()}, 3);
}

}  // namespace

TEST(SeriesBasis, ThueMorse) {
  MahlerOperator L(2, {Poly(-1), P({1, -1})});
  auto basis = series_basis(L, 8);
  ASSERT_EQ(basis.dim(), 1);
  for (int n = 0; n < 8; ++n) EXPECT_EQ(basis.elements[0].c[n], thue_morse_sign(n));
}

TEST(SeriesBasis, MonomialSolution) {
  MahlerOperator L(2, {P({0, -1}), Poly(1)});
  auto basis = series_basis(L, 6);
  ASSERT_EQ(basis.dim(), 1);
  EXPECT_EQ(basis.elements[0].c, (std::vector<Rational>{0, 1, 0, 0, 0, 0}));
}

TEST(SeriesBasis, ExtendThueMorse) {
  MahlerOperator L(2, {Poly(-1), P({1, -1})});
  auto basis = extend_basis(L, series_basis(L, 8), 16);
  EXPECT_EQ(basis.elements[0].c[15], 1);
  for (int n = 0; n < 16; ++n) EXPECT_EQ(basis.elements[0].c[n], thue_morse_sign(n));
  auto same = extend_basis(L, basis, 16);
  EXPECT_EQ(same.elements[0].c, basis.elements[0].c);
}

TEST(SeriesBasis, SolutionsAnnihilated) {
  MahlerOperator L(2, {P({0, 1}), -P({1, 3, 4}), P({1, 0, 1}) * P({1, 0, 1}) * Rational(3)});
  auto basis = series_basis(L, 60);
  for (const auto& z : basis.elements) EXPECT_TRUE(apply_operator(L, z).is_zero());
}

TEST(SeriesBasis, TernaryParityFourDimensional) {
  MahlerOperator L = af_operator();
  auto basis = series_basis(L, 40);
  EXPECT_EQ(basis.dim(), 4);
  for (const auto& z : basis.elements) EXPECT_TRUE(apply_operator(L, z).is_zero());
  auto ext = extend_basis(L, basis, 127);
  auto fresh = series_basis(L, 127);
  ASSERT_EQ(ext.dim(), 4);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(ext.elements[i].c, fresh.elements[i].c);
  for (const auto& z : ext.elements) EXPECT_TRUE(apply_operator(L, z).is_zero());
  // Echelon: increasing valuations with unit pivots.
  for (int i = 0; i < 4; ++i) {
    int v = ext.elements[i].valuation();
    EXPECT_EQ(ext.elements[i].c[v], 1);
    for (int j = 0; j < 4; ++j)
      if (j != i) EXPECT_EQ(ext.elements[j].c[v], 0);
    if (i) EXPECT_GT(v, ext.elements[i - 1].valuation());
  }
}

TEST(SeriesBasis, DimensionStableInSigma) {
  MahlerOperator L(2, {P({0, 1}), -P({1, 1, 2}), P({1, 0, 1, 0, 1})});
  int d = series_basis(L).dim();
  for (int s = free_prefix(L); s < 40; s += 7) EXPECT_EQ(series_basis(L, s).dim(), d);
}
