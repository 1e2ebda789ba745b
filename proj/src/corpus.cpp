#include "msolve/corpus.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace msolve::corpus {

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

}  // namespace

MahlerOperator baum_sweet() { return MahlerOperator(2, {Poly(-1), P({0, 1}), Poly(1)}); }

MahlerOperator rudin_shapiro() { return MahlerOperator(2, {Poly(-1), P({1, -1}), P({0, 2})}); }

MahlerOperator stern_brocot_b2() {
  return MahlerOperator(2, {P({0, 1}), -P({1, 1, 2}), P({1, 0, 1, 0, 1})});
}

MahlerOperator stern_brocot_b4() {
  Poly lead = P({1, 1, 2}) * pow(P({1, 1, 1}), 2) * pow(P({1, -1, 1}), 2) * pow(P({1, 0, -1, 0, 1}), 2) *
              P({1, 0, 0, 0, -1, 0, 0, 0, 1});
  Poly c1 = P({1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4});
  Poly c0 = Poly::x(3) * P({1, 0, 0, 0, 1, 0, 0, 0, 2});
  return MahlerOperator(4, {c0, -c1, lead});
}

MahlerOperator no_2s_in_3_exp() {
  return MahlerOperator(2, {P({0, 1}), -P({1, 3, 4}), P({1, 0, 1}) * P({1, 0, 1}) * Rational(3)});
}

MahlerOperator dilcher_stolarsky() { return MahlerOperator(4, {Poly(1), -P({1, 1, 1}), Poly::x(4)}); }

MahlerOperator thue_morse() { return MahlerOperator(2, {Poly(-1), P({1, -1})}); }

MahlerOperator adamczewski_faverjon() {
  Poly x = P({0, 1}), x2 = P({0, 0, 1});
  PolyMatrix A{{1, x, 0, x2}, {x, 1, x2, 0}, {0, x2, 1, x}, {x2, 0, x, 1}};
  return annihilator_from_system(A, {Poly(1), Poly(), Poly(), Poly()}, 3);
}

MahlerOperator no_solution_b4() { return MahlerOperator(4, {Poly::x(10), Poly(-1), Poly(), Poly(), Poly(1)}); }

MahlerOperator cube_root() { return MahlerOperator(2, {P({0, -1}), Poly(), Poly(1)}); }

MahlerOperator parity_lclm() {
  MahlerOperator a(2, {-P({1, -2}), P({1, 0, -2})});
  MahlerOperator b(2, {-P({1, -3}), P({1, 0, -3})});
  return lclm(a, b);
}

MahlerOperator truncated_lclm() {
  return MahlerOperator(2, {P({0, 1, -4, 1}), -P({1, 1, -4, -5, 1}), P({1, 0, 0, 0, -5})});
}

Planted planted_lclm(std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2), count(2, 3), radix(2, 3);
  auto poly = [&]() {
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& v : c) v = coef(rng);
    if (c.back() == 0) c.back() = 1;
    return Poly(c);
  };
  Planted out;
  const int b = radix(rng);
  const int n = count(rng);
  std::vector<MahlerOperator> ops;
  while (static_cast<int>(out.planted.size()) < n) {
    Poly num = poly(), den = poly();
    if (num.is_zero() || den.is_zero()) continue;
    RatFun u(num, den);
    bool dup = false;
    for (const auto& v : out.planted) dup = dup || v == u;
    if (dup) continue;
    out.planted.push_back(u);
    ops.push_back(first_order(b, u));
  }
  out.op = lclm(ops);
  return out;
}

MahlerOperator lclm_pow(int b, int q) {
  std::vector<MahlerOperator> ops;
  for (int i = 1; i <= q; ++i) {
    if (std::gcd(i, b) != 1) throw std::invalid_argument("lclm_pow: x^(1/i) needs gcd(i, b) = 1");
    // Smallest k >= 1 with i | b^k - 1.
    Integer bk = b;
    int k = 1;
    while (Integer((bk - 1) % i) != 0) {
      bk *= b;
      ++k;
    }
    std::vector<Poly> c(k + 1);
    c[k] = Poly(1);
    c[0] = -Poly::x(static_cast<int>(Integer((bk - 1) / i).get_si()));
    ops.emplace_back(b, c);
  }
  return lclm(ops);
}

Planted rmo(int b, int delta, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-1000, 1000);
  auto dense = [&]() {
    std::vector<Rational> c(delta + 1);
    for (auto& v : c) v = coef(rng);
    if (c.back() == 0) c.back() = 1;
    return Poly(c);
  };
  auto first = [&]() {
    Poly U = dense(), V = dense();
    return RatFun(U, V);
  };
  RatFun ua = first(), ub = first(), uc = first();
  MahlerOperator C1 = lclm(first_order(b, ua), first_order(b, ub));
  std::vector<Poly> c = C1.coeffs();
  const int d = C1.degree();
  for (auto& p : c) p = p + Poly::x(d);
  Planted out;
  out.op = lclm(first_order(b, uc), MahlerOperator(b, c));
  out.planted = {uc};
  return out;
}

std::vector<Entry> small_entries() {
  return {{"Baum_Sweet", baum_sweet()},
          {"Rudin_Shapiro", rudin_shapiro()},
          {"Stern_Brocot_b2", stern_brocot_b2()},
          {"Stern_Brocot_b4", stern_brocot_b4()},
          {"no_2s_in_3_exp", no_2s_in_3_exp()},
          {"Dilcher_Stolarsky", dilcher_stolarsky()},
          {"Thue_Morse", thue_morse()},
          {"lclm_parity", parity_lclm()},
          {"lclm_truncated", truncated_lclm()}};
}

std::vector<Entry> order_two_entries() {
  return {{"Baum_Sweet", baum_sweet()},
          {"Rudin_Shapiro", rudin_shapiro()},
          {"Stern_Brocot_b2", stern_brocot_b2()},
          {"Stern_Brocot_b4", stern_brocot_b4()},
          {"no_2s_in_3_exp", no_2s_in_3_exp()},
          {"Dilcher_Stolarsky", dilcher_stolarsky()}};
}

}  // namespace msolve::corpus
