#include <gtest/gtest.h>

#include <random>

#include "msolve/arrangement.hpp"

using namespace msolve;

namespace {

MultiPoly a(int n, int i) { return MultiPoly::var(n, i); }

const std::vector<LinearComponent>& comps(const Decomposition& d) {
  static const std::vector<LinearComponent> none;
  if (!std::holds_alternative<std::vector<LinearComponent>>(d)) {
    ADD_FAILURE() << "unexpected NonLinearSignal: " << std::get<NonLinearSignal>(d).reason;
    return none;
  }
  return std::get<std::vector<LinearComponent>>(d);
}

// Components match as a set of subspaces.
bool has_subspace(const std::vector<LinearComponent>& cs, const std::vector<MultiPoly>& forms, int n) {
  LinearComponent want = make_component(forms, n);
  for (const auto& c : cs)
    if (c.dim() == want.dim() && component_contains(c, want)) return true;
  return false;
}

std::vector<Rational> random_point(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-20, 20);
  std::vector<Rational> p(n);
  for (auto& x : p) x = d(rng);
  return p;
}

}  // namespace

TEST(MultiPoly, Arithmetic) {
  const int n = 3;
  MultiPoly f = a(n, 0) + a(n, 1), g = a(n, 0) - a(n, 1);
  MultiPoly h = f * g;
  EXPECT_EQ(h, a(n, 0) * a(n, 0) - a(n, 1) * a(n, 1));
  EXPECT_EQ(h.degree(), 2);
  EXPECT_TRUE(h.is_homogeneous());
  EXPECT_FALSE((h + MultiPoly::constant(n, 1)).is_homogeneous());
  EXPECT_EQ(h.eval({3, 1, 7}), 8);
  EXPECT_EQ(f.pow(3).eval({1, 1, 0}), 8);
  EXPECT_EQ(h.to_string(), "a1^2 - a2^2");
  EXPECT_EQ((f * Rational(1, 2)).to_string(), "1/2*a1 + 1/2*a2");
}

TEST(MultiPoly, MonomialOrders) {
  // a1 a3 vs a2^2: lex puts a1 first, grevlex penalizes the last variable.
  Monomial x{1, 0, 1}, y{0, 2, 0};
  EXPECT_TRUE(monomial_greater(x, y, MonomialOrder::Lex));
  EXPECT_TRUE(monomial_greater(y, x, MonomialOrder::GrevLex));
  EXPECT_TRUE(monomial_greater(Monomial{0, 0, 2}, Monomial{1, 0, 0}, MonomialOrder::GrevLex));
}

TEST(Groebner, SquareAndProduct) {
  const int n = 2;
  auto G = groebner({a(n, 0) * a(n, 0), a(n, 0) * a(n, 1)}, MonomialOrder::Lex);
  ASSERT_EQ(G.size(), 2u);
  EXPECT_EQ(G[0], a(n, 0) * a(n, 1));
  EXPECT_EQ(G[1], a(n, 0) * a(n, 0));
}

TEST(Groebner, Textbook) {
  // <x^2 y - 1, x y^2 - x> with x > y has reduced lex basis {y^2 - 1, x^2 - y}.
  const int n = 2;
  MultiPoly x = a(n, 0), y = a(n, 1), one = MultiPoly::constant(n, 1);
  auto G = groebner({x * x * y - one, x * y * y - x}, MonomialOrder::Lex);
  ASSERT_EQ(G.size(), 2u);
  EXPECT_EQ(G[0], y * y - one);
  EXPECT_EQ(G[1], x * x - y);
  // Membership agrees with explicit combinations.
  EXPECT_TRUE(in_ideal(x * (x * x * y - one) + y * (x * y * y - x), G, MonomialOrder::Lex));
  EXPECT_FALSE(in_ideal(x, G, MonomialOrder::Lex));
}

TEST(Groebner, OrdersGenerateSameIdeal) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  const int n = 3;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<MultiPoly> gens;
    for (int k = 0; k < 3; ++k) {
      MultiPoly f(n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Monomial m(n, 0);
          ++m[i];
          ++m[j];
          f.add_term(m, d(rng));
        }
      gens.push_back(f);
    }
    auto L = groebner(gens, MonomialOrder::Lex);
    auto R = groebner(gens, MonomialOrder::GrevLex);
    for (const auto& g : gens) {
      EXPECT_TRUE(in_ideal(g, L, MonomialOrder::Lex));
      EXPECT_TRUE(in_ideal(g, R, MonomialOrder::GrevLex));
    }
    for (const auto& g : L) EXPECT_TRUE(in_ideal(g, R, MonomialOrder::GrevLex));
    for (const auto& g : R) EXPECT_TRUE(in_ideal(g, L, MonomialOrder::Lex));
  }
}

TEST(Groebner, Radical) {
  const int n = 2;
  MultiPoly x = a(n, 0), y = a(n, 1);
  EXPECT_TRUE(in_radical(x, {x * x}));
  EXPECT_FALSE(in_ideal(x, groebner({x * x}, MonomialOrder::Lex), MonomialOrder::Lex));
  EXPECT_FALSE(in_radical(x, {x * y}));
  // x^2 + y^2 vanishes only at 0 over Q but not over Q-bar.
  EXPECT_FALSE(in_radical(x, {x * x + y * y}));
  EXPECT_TRUE(in_radical(y, {x * x + y * y, x}));
}

TEST(LinearFactors, Products) {
  const int n = 3;
  MultiPoly l1 = a(n, 0) - a(n, 2), l2 = a(n, 1) + a(n, 2) * Rational(2, 3), q = a(n, 0) * a(n, 0) + a(n, 1) * a(n, 1);
  auto r = linear_factors(l1 * l1 * l2 * q * Rational(5));
  ASSERT_EQ(r.factors.size(), 2u);
  int total = 0;
  for (const auto& [l, m] : r.factors) {
    total += m;
    if (l == l1) EXPECT_EQ(m, 2);
    else EXPECT_EQ(l, MultiPoly::linear({0, 1, Rational(2, 3)}));
  }
  EXPECT_EQ(total, 3);
  EXPECT_EQ(r.cofactor, q * Rational(5));
  // No pure powers: a1 a2 a3.
  auto s = linear_factors(a(n, 0) * a(n, 1) * a(n, 2));
  EXPECT_EQ(s.factors.size(), 3u);
  EXPECT_TRUE(s.cofactor.is_constant());
  EXPECT_TRUE(linear_factors(q).factors.empty());
}

TEST(LinearFactors, RandomProductsRecovered) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    MultiPoly f = MultiPoly::constant(n, 1);
    int deg = 0;
    for (int k = 0; k < 1 + trial % 4; ++k) {
      std::vector<Rational> c(n);
      for (auto& x : c) x = d(rng);
      MultiPoly l = MultiPoly::linear(c);
      if (l.is_zero()) continue;
      f = f * l;
      ++deg;
    }
    if (deg == 0) continue;
    auto r = linear_factors(f);
    int total = 0;
    MultiPoly prod = r.cofactor;
    for (const auto& [l, m] : r.factors) {
      total += m;
      prod = prod * l.pow(m);
    }
    EXPECT_EQ(total, deg);
    EXPECT_EQ(prod, f);
    EXPECT_TRUE(r.cofactor.is_constant());
  }
}

TEST(Decompose, ProductSplits) {
  const int n = 2;
  auto cs = comps(linear_decompose({a(n, 0) * a(n, 1)}, n));
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_TRUE(has_subspace(cs, {a(n, 0)}, n));
  EXPECT_TRUE(has_subspace(cs, {a(n, 1)}, n));
}

TEST(Decompose, SumOfSquaresIsNonLinear) {
  const int n = 2;
  auto d = linear_decompose({a(n, 0) * a(n, 0) + a(n, 1) * a(n, 1)}, n);
  EXPECT_TRUE(std::holds_alternative<NonLinearSignal>(d));
}

TEST(Decompose, LinearIdealIsOneComponent) {
  const int n = 4;
  auto cs = comps(linear_decompose({a(n, 0) - a(n, 2), a(n, 1) - a(n, 3), a(n, 0) + a(n, 1) - a(n, 2) - a(n, 3)}, n));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].dim(), 2);
}

TEST(Decompose, NonReducedAndEmbedded) {
  const int n = 2;
  auto cs = comps(linear_decompose({a(n, 0) * a(n, 0), a(n, 0) * a(n, 1)}, n));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_TRUE(has_subspace(cs, {a(n, 0)}, n));
}

TEST(Decompose, OnlyOrigin) {
  // x^2 + y^2 = 0 together with x = 0 forces y = 0.
  const int n = 2;
  auto cs = comps(linear_decompose({a(n, 0) * a(n, 0) + a(n, 1) * a(n, 1), a(n, 0)}, n));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].dim(), 0);
  EXPECT_FALSE(parametrize(cs[0]).has_value());
}

TEST(Decompose, ThreePlaneArrangement) {
  // Union of <a1-a3, a2-a4>, <a1-a2, a1+a3, a1+a4>, <a1-a4, a1+a2, a1+a3> from its products.
  const int n = 4;
  std::vector<std::vector<MultiPoly>> C = {
      {a(n, 0) - a(n, 2), a(n, 1) - a(n, 3)},
      {a(n, 0) - a(n, 1), a(n, 0) + a(n, 2), a(n, 0) + a(n, 3)},
      {a(n, 0) - a(n, 3), a(n, 0) + a(n, 1), a(n, 0) + a(n, 2)},
  };
  std::vector<MultiPoly> gens;
  for (const auto& f0 : C[0])
    for (const auto& f1 : C[1])
      for (const auto& f2 : C[2]) gens.push_back(f0 * f1 * f2);
  auto cs = comps(linear_decompose(gens, n));
  ASSERT_EQ(cs.size(), 3u);
  for (const auto& c : C) EXPECT_TRUE(has_subspace(cs, c, n));
  EXPECT_EQ(cs[0].dim(), 2);
  EXPECT_EQ(cs[1].dim(), 1);
}

TEST(Parametrize, Examples) {
  const int n = 4;
  auto c = make_component({a(n, 0) - a(n, 2), a(n, 1) - a(n, 3)}, n);
  auto S = parametrize(c);
  ASSERT_TRUE(S.has_value());
  RatMatrix want = {{1, 0, 1, 0}, {0, 1, 0, 1}};
  EXPECT_EQ(*S, want);

  auto z = make_component({a(1, 0)}, 1);
  EXPECT_FALSE(parametrize(z).has_value());

  auto full = make_component({}, 3);
  RatMatrix id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(*parametrize(full), id);
}

TEST(Decompose, PropertyRandomArrangements) {
  // V = union of random rational subspaces, given by all products of one form from each.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + trial % 2;
    const int k = 1 + trial % 3;
    std::vector<std::vector<MultiPoly>> C;
    for (int s = 0; s < k; ++s) {
      std::vector<MultiPoly> forms;
      const int codim = 1 + (trial + s) % (n - 1);
      for (int t = 0; t < codim; ++t) {
        std::vector<Rational> c(n);
        for (auto& x : c) x = d(rng);
        forms.push_back(MultiPoly::linear(c));
      }
      C.push_back(forms);
    }
    std::vector<MultiPoly> gens = {MultiPoly::constant(n, 1)};
    for (const auto& forms : C) {
      std::vector<MultiPoly> next;
      for (const auto& g : gens)
        for (const auto& f : forms)
          if (!f.is_zero()) next.push_back(g * f);
      gens = next;
    }
    auto cs = comps(linear_decompose(gens, n));
    ASSERT_FALSE(cs.empty());
    // Each planted subspace is inside some component, and components are irredundant.
    for (const auto& forms : C) {
      auto want = make_component(forms, n);
      bool inside = false;
      for (const auto& c : cs) inside = inside || component_contains(c, want);
      EXPECT_TRUE(inside) << "trial " << trial;
    }
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j)
        if (i != j) EXPECT_FALSE(component_contains(cs[j], cs[i]));
    // Generators vanish on random points of each component.
    for (const auto& c : cs) {
      for (int rep = 0; rep < 3 && c.dim() > 0; ++rep) {
        auto t = random_point(rng, c.dim());
        std::vector<Rational> p(n, Rational(0));
        for (int r = 0; r < c.dim(); ++r)
          for (int i = 0; i < n; ++i) p[i] += t[r] * c.S[r][i];
        for (const auto& g : gens) EXPECT_EQ(g.eval(p), 0);
      }
    }
    // Grid points on the variety lie in some component.
    std::vector<Rational> p(n);
    std::vector<int> idx(n, -2);
    while (true) {
      for (int i = 0; i < n; ++i) p[i] = idx[i];
      bool on = true;
      for (const auto& g : gens) on = on && g.eval(p) == 0;
      if (on) {
        bool covered = false;
        for (const auto& c : cs) {
          bool in = true;
          for (const auto& l : c.forms) in = in && l.eval(p) == 0;
          covered = covered || in;
        }
        EXPECT_TRUE(covered) << "trial " << trial;
      }
      int i = 0;
      while (i < n && idx[i] == 2) idx[i++] = -2;
      if (i == n) break;
      ++idx[i];
    }
  }
}
