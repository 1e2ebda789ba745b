// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 when every failing
// criterion is listed in kKnownFailures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "msolve/corpus.hpp"
#include "msolve/dtrans.hpp"
#include "msolve/factor.hpp"
#include "msolve/gpform.hpp"
#include "msolve/orderbasis.hpp"
#include "msolve/petkovsek.hpp"
#include "msolve/polymat.hpp"
#include "msolve/riccati_hp.hpp"
#include "msolve/series.hpp"

using namespace msolve;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitSternBrocot2 = 10;   // per method
constexpr double kLimitSternBrocot4 = 60;
constexpr double kLimitNoTwos = 30;
constexpr double kLimitAdamczewskiFaverjon = 600;
constexpr double kLimitEmptyCase = 600;
constexpr double kLimitTranscendence = 900;
constexpr double kLimitSyzygyRank = 120;
constexpr double kLimitRamified = 5;

// Criterion 6 cannot hold: three of the six order-2 operators have rational solutions of (r1).
const std::set<int> kKnownFailures = {6};

// IP needs minutes to hours on these; they join the method comparison only with --full.
const std::set<std::string> kSlowEntries = {"Adamczewski_Faverjon", "dft_Stern_Brocot_b4", "dft_Dilcher_Stolarsky",
                                            "lclm_3pow_b5", "lclm_3pow_b7"};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

// Every block produced during the run, for the residual suite.
struct Solved {
  MahlerOperator L;
  std::vector<SolutionBlock> blocks;
};
std::vector<Solved> g_solved;

enum class Method { BP, IP, HP };
const char* method_name(Method m) { return m == Method::BP ? "bp" : m == Method::IP ? "ip" : "hp"; }

std::vector<SolutionBlock> solve(const MahlerOperator& L, Method m) {
  std::vector<SolutionBlock> blocks;
  switch (m) {
    case Method::BP: blocks = riccati_ramified(L, PetkovsekMethod::Basic); break;
    case Method::IP: blocks = riccati_ramified(L, PetkovsekMethod::Improved); break;
    case Method::HP: blocks = riccati_hp(L); break;
  }
  g_solved.push_back({L, blocks});
  return blocks;
}

bool single_block(const std::vector<SolutionBlock>& blocks, const RatFun& u, const Rational& lambda) {
  return blocks.size() == 1 && blocks[0].q == 1 && blocks[0].s() == 1 && blocks[0].lambda == lambda &&
         specialize_unit(blocks[0].u, 0) == u;
}

ParamRational single(const RatFun& u) {
  ParamRational p;
  p.num.push_back(u.num());
  p.den.push_back(u.den());
  return p;
}

bool has_member(const std::vector<SolutionBlock>& blocks, const RatFun& u) {
  for (const auto& b : blocks)
    if (b.q == 1 && family_contains(b.u, single(u))) return true;
  return false;
}

// sum_i l_i u Mu ... M^{i-1}u, written out from the definition.
RatFun residual(const MahlerOperator& L, const RatFun& u) {
  RatFun acc, prod(Rational(1)), Mu = u;
  for (int i = 0; i <= L.order(); ++i) {
    acc += RatFun(L.coeff(i)) * prod;
    prod *= Mu;
    Mu = Mu.compose_pow(L.radix());
  }
  return acc;
}

std::vector<TruncatedSeries> rational_series(const std::vector<RatFun>& fs, int n) {
  std::vector<TruncatedSeries> out;
  for (const auto& f : fs) {
    TruncatedSeries s;
    s.c.assign(n, Rational(0));
    Rational inv = 1 / f.den().coeff(0);
    for (int k = 0; k < n; ++k) {
      Rational acc = f.num().coeff(k);
      for (int j = 1; j <= f.den().deg() && j <= k; ++j) acc -= f.den().coeff(j) * s.c[k - j];
      s.c[k] = acc * inv;
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool annihilates(const std::vector<Poly>& w, const std::vector<TruncatedSeries>& f, int sigma) {
  for (int n = 0; n < sigma; ++n) {
    Rational acc = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      for (int e = 0; e <= w[j].deg() && e <= n; ++e) acc += w[j].coeff(e) * f[j].coeff(n - e);
    if (acc != 0) return false;
  }
  return true;
}

FilteredMatrix generating_matrix(const MahlerOperator& T, int sigma) {
  SeriesBasis B = series_basis(T, sigma);
  auto db = degree_bounds(T.radix(), T.order(), T.degree());
  return filtered_matrix(minimal_basis(riccati_columns(B.elements, T.radix(), sigma), sigma), db.b_inf);
}

Check criterion_stern_brocot_2() {
  Check c;
  const MahlerOperator L = corpus::stern_brocot_b2();
  const RatFun want(Poly::x(), P({1, 1, 1}));
  for (Method m : {Method::BP, Method::IP, Method::HP}) {
    auto t0 = Clock::now();
    auto blocks = solve(L, m);
    double dt = since(t0);
    c.require(single_block(blocks, want, 1), std::string(method_name(m)) + " did not return {x/(1+x+x^2)}");
    c.require(dt < kLimitSternBrocot2, std::string(method_name(m)) + " took " + secs(dt));
    c.note(std::string(method_name(m)) + " " + secs(dt));
  }
  const MahlerOperator L2(2, {Poly::x(), -P({1, 1, 1})});
  const MahlerOperator one_minus_M(2, {Poly(1), Poly(-1)});
  c.require(compose(one_minus_M, L2) == L, "L'2 != (1 - M) L2");
  c.note("L'2 = (1 - M) L2 exact");
  return c;
}

Check criterion_stern_brocot_4() {
  Check c;
  const MahlerOperator L = corpus::stern_brocot_b4();
  const RatFun want(Poly::x(3), P({1, 1, 1}) * P({1, 0, 1, 0, 1}));
  auto t0 = Clock::now();
  for (Method m : {Method::BP, Method::IP, Method::HP})
    c.require(single_block(solve(L, m), want, 1), std::string(method_name(m)) + " did not return the single block");
  double dt = since(t0);
  c.require(dt < kLimitSternBrocot4, "took " + secs(dt));
  const MahlerOperator L4(4, {-Poly::x(3), P({1, 1, 1}) * P({1, 0, 1, 0, 1})});
  const MahlerOperator left(4, {-P({1, 0, 0, 0, 1, 0, 0, 0, 2}), P({1, 1, 2})});
  c.require(compose(left, L4) == L, "L'4 != ((2x^2+x+1)M - (2x^8+x^4+1)) L4");
  c.note("bp, ip, hp agree in " + secs(dt));
  c.note("factorization exact");
  return c;
}

Check criterion_no_twos() {
  Check c;
  const MahlerOperator L = corpus::no_2s_in_3_exp();
  const RatFun want(Poly(1), P({3, 3}));
  auto t0 = Clock::now();
  for (Method m : {Method::BP, Method::IP, Method::HP})
    c.require(single_block(solve(L, m), want, Rational(1, 3)),
              std::string(method_name(m)) + " did not return {1/(3(1+x))} with lambda 1/3");
  double dt = since(t0);
  c.require(dt < kLimitNoTwos, "took " + secs(dt));
  c.note("bp, ip, hp agree in " + secs(dt));
  return c;
}

Check criterion_adamczewski_faverjon() {
  Check c;
  const MahlerOperator L = corpus::adamczewski_faverjon();
  c.require(L.order() == 4 && L.degree() == 258,
            "order " + std::to_string(L.order()) + " degree " + std::to_string(L.degree()));

  auto ad = admissible_data(L);
  c.require(ad.lambdas.size() == 1, "expected a single rational lambda");
  if (!c.failures.empty()) return c;
  LambdaData ld = ad.lambdas[0];
  const MahlerOperator T = transform_lambda(L, ld);
  const auto db = degree_bounds(T.radix(), T.order(), T.degree());
  c.require(db.b_num == Rational(344, 9), "B_num = " + db.b_num.get_str());
  c.require(db.b_den == Rational(86, 3), "B_den = " + db.b_den.get_str());

  auto t0 = Clock::now();
  HPResult res = riccati_hp_run(L);
  double dt = since(t0);
  g_solved.push_back({L, res.blocks});
  c.require(dt < kLimitAdamczewskiFaverjon, "HP took " + secs(dt));

  std::vector<int> dims;
  for (const auto& b : res.blocks) dims.push_back(b.s() - 1);
  std::sort(dims.begin(), dims.end());
  c.require(dims == std::vector<int>({0, 0, 1}), "projective dimensions differ from (0,0,1)");
  ParamRational pencil;
  pencil.num = {Poly(1), Poly::x(3)};
  pencil.den = {P({1, 0, 1, 0, 1}), P({0, 1, 0, 1, 0, 1})};
  const RatFun u1(Poly(1), P({1, -1, -1})), u2(Poly(1), P({1, 1, -1}));
  bool got1 = false, got2 = false, got_pencil = false;
  for (const auto& b : res.blocks) {
    if (b.q != 1) continue;
    if (b.s() == 1) {
      RatFun u = specialize_unit(b.u, 0);
      got1 = got1 || u == u1;
      got2 = got2 || u == u2;
    } else if (b.s() == 2) {
      got_pencil = got_pencil || (family_contains(b.u, pencil) && family_contains(pencil, b.u));
    }
  }
  c.require(got1 && got2 && got_pencil, "block set differs");
  c.require(!res.stats.trace.empty() && res.stats.trace.back().rho == 5, "final filtered rank is not 5");
  c.note("HP " + secs(dt) + ", final sigma " + std::to_string(res.stats.trace.back().sigma) + " rank " +
         std::to_string(res.stats.trace.back().rho));

  // Soft: first sigma at which the filtered rank reaches 7, 6 and 5.
  int first[3] = {0, 0, 0};
  for (int sigma = 110; sigma <= 140 && first[2] == 0; ++sigma) {
    int rho = generating_matrix(T, sigma).rho;
    for (int k = 0; k < 3; ++k)
      if (first[k] == 0 && rho <= 7 - k) first[k] = sigma;
  }
  c.note("soft: rank 7/6/5 from sigma " + std::to_string(first[0]) + "/" + std::to_string(first[1]) + "/" +
         std::to_string(first[2]) + " (reference 121/124/127, reported only)");
  return c;
}

Check criterion_empty_case() {
  Check c;
  const MahlerOperator L = corpus::no_solution_b4();
  auto t0 = Clock::now();
  HPResult res = riccati_hp_run(L);
  double dt = since(t0);
  c.require(res.blocks.empty(), "HP found solutions");
  c.require(dt < kLimitEmptyCase, "HP took " + secs(dt));

  const int b = 4, r = 4, omega = 10;
  const int shift = (256 - b) * omega;  // (b^r - b) omega
  for (long lambda0 : {1L, 2L}) {
    const MahlerOperator Lg(b, {Poly::x(omega) * Rational(lambda0), Poly(-1), Poly(), Poly(), Poly(1)});
    if (lambda0 == 1) c.require(Lg == L, "corpus operator is not x^10 - M + M^4");
    LambdaData* ld = nullptr;
    auto ad = admissible_data(Lg);
    for (auto& d : ad.lambdas)
      if (d.lambda == lambda0) ld = &d;
    c.require(ld != nullptr, "lambda0 = " + std::to_string(lambda0) + " not admissible");
    if (!ld) continue;
    const MahlerOperator T = transform_lambda(Lg, *ld);
    Rational lr = 1;
    for (int i = 0; i < r - 1; ++i) lr *= lambda0;
    const MahlerOperator pattern(b, {Poly(1), Poly(-1), Poly(), Poly(), Poly::x(shift) * lr});
    c.require(T == pattern, "transform for lambda0 = " + std::to_string(lambda0) + " breaks the pattern");
    const auto db = degree_bounds(b, r, T.degree());
    const Integer floored = db.b_num.get_num() / db.b_num.get_den();
    c.require(floored == 157, "floored B_num = " + floored.get_str());
  }
  c.note("HP returns no solution in " + secs(dt) + " (final sigma " + std::to_string(res.stats.trace.back().sigma) +
         ")");
  c.note("transform pattern holds, floor(B_num) = 157");
  for (const auto& m : res.unsupported) c.note("non-rational leading coefficients: roots of " + m.to_string("lambda"));
  return c;
}

Check criterion_transcendence() {
  Check c;
  auto t0 = Clock::now();
  int independent = 0;
  std::vector<std::string> inconclusive;
  const auto entries = corpus::order_two_entries();
  for (const auto& e : entries) {
    TranscendenceVerdict v = independence_check(e.op);
    if (v.status == TranscendenceStatus::Independent) {
      ++independent;
    } else {
      std::string why = v.r1_solutions.empty() ? "(r2) has solutions" : "(r1) has solutions";
      if (!v.r1_solutions.empty()) why += " e.g. u = " + specialize_unit(v.r1_solutions[0].u, 0).to_string();
      inconclusive.push_back(e.name + ": " + why);
    }
  }
  double dt = since(t0);
  c.require(independent == static_cast<int>(entries.size()), "independent on " + std::to_string(independent) + "/" +
                                                                 std::to_string(entries.size()) + " [" +
                                                                 join(inconclusive, "; ") + "]");
  const MahlerOperator r2 = riccati_r2_operator(corpus::dilcher_stolarsky());
  c.require(r2.radix() == 16 && r2.degree() == 50, "(r2) of Dilcher_Stolarsky has radix " +
                                                       std::to_string(r2.radix()) + ", degree " +
                                                       std::to_string(r2.degree()));
  c.require(dt < kLimitTranscendence, "took " + secs(dt));
  c.note("(r2) of Dilcher_Stolarsky: radix 16, degree 50");
  c.note(std::to_string(independent) + "/6 independent in " + secs(dt));
  return c;
}

Check criterion_syzygy_rank() {
  Check c;
  auto t0 = Clock::now();
  const int b = 2;
  const MahlerOperator L1(b, {-P({1, -2}), P({1, 0, -2})});
  const MahlerOperator L2(b, {-P({1, -3}), P({1, 0, -3})});
  const MahlerOperator P2(b, {P({0, 1, -4, 1}), -P({1, 1, -4, -5, 1}), P({1, 0, 0, 0, -5})});
  const MahlerOperator L = lclm(lclm(L1, L2), P2);
  const auto bounds = degree_bounds(b, L.order(), L.degree());
  auto columns = [&](int sigma) {
    auto basis2 = series_basis(P2, sigma);
    auto y = rational_series({RatFun(Poly(1), P({1, -2})), RatFun(Poly(1), P({1, -3}))}, sigma);
    for (const auto& e : basis2.elements) y.push_back(e);
    return riccati_columns(y, b, sigma);
  };
  std::vector<int> ranks;
  FilteredMatrix W;
  for (int sigma : {100, 200, 400}) {
    W = filtered_matrix(minimal_basis(columns(sigma), sigma), bounds.b_inf);
    ranks.push_back(W.rho);
  }
  c.require(ranks[0] >= ranks[1] && ranks[1] >= ranks[2], "ranks increase with sigma");
  c.require(ranks.back() == 5, "rank at sigma 400 is " + std::to_string(ranks.back()));
  // The retained rows must be exact relations: check them far past the order used, then their rank over Q(x).
  auto longer = columns(700);
  bool exact = true;
  for (const auto& w : W.W) exact = exact && annihilates(w, longer, 700);
  c.require(exact, "a retained syzygy fails at order 700");
  c.require(rank_ratfun(W.W) == 5, "rank over Q(x) is not 5");
  double dt = since(t0);
  c.require(dt < kLimitSyzygyRank, "took " + secs(dt));
  c.note("rank " + std::to_string(ranks[0]) + "/" + std::to_string(ranks[1]) + "/" + std::to_string(ranks[2]) +
         " at sigma 100/200/400, exact to 700, " + secs(dt));
  return c;
}

Check criterion_ramified() {
  Check c;
  auto t0 = Clock::now();
  const MahlerOperator L = corpus::cube_root();
  for (auto m : {PetkovsekMethod::Basic, PetkovsekMethod::Improved}) {
    auto blocks = riccati_ramified(L, m);
    g_solved.push_back({L, blocks});
    c.require(blocks.size() == 2, "expected two blocks");
    std::set<std::string> got;
    for (const auto& blk : blocks) {
      c.require(blk.q == 3 && blk.s() == 1, "block is not a single x^(1/3) solution");
      RatFun u = specialize_unit(blk.u, 0);
      got.insert(u.to_string("t"));
      // In t = x^(1/3) the equation reads u(t) u(t^2) - t^3 = 0.
      RatFun direct = u * u.compose_pow(2) - RatFun(Poly::x(3));
      c.require(direct.is_zero() && riccati_residual(L.ramify(3), u).is_zero(), "nonzero residual");
    }
    c.require(got == std::set<std::string>{"t", "-t"}, "solutions are not +-x^(1/3)");
  }
  double dt = since(t0);
  c.require(dt < kLimitRamified, "took " + secs(dt));
  c.note("+-x^(1/3), zero residual, " + secs(dt));
  return c;
}

// (a)
void suite_residuals(Check& c) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> g(-6, 6);
  long checked = 0;
  for (const auto& s : g_solved)
    for (const auto& blk : s.blocks) {
      const MahlerOperator Lq = blk.q == 1 ? s.L : s.L.ramify(blk.q);
      c.require(riccati_vanishes(Lq, blk.u), "(a) symbolic residual nonzero");
      for (int i = 0; i < blk.s(); ++i) {
        c.require(residual(Lq, specialize_unit(blk.u, i)).is_zero(), "(a) residual nonzero");
        ++checked;
      }
      for (int t = 0; t < 3; ++t) {
        std::vector<Rational> v(blk.s());
        for (auto& e : v) e = g(rng);
        v[0] += 13;
        RatFun u;
        try {
          u = specialize(blk.u, v);
        } catch (const std::exception&) {
          continue;  // the denominator vanishes at this point
        }
        c.require(residual(Lq, u).is_zero(), "(a) residual nonzero");
        ++checked;
      }
    }
  c.note("(a) " + std::to_string(checked) + " specializations");
}

// (b)
void suite_methods_agree(Check& c, bool full) {
  int compared = 0;
  std::vector<std::string> skipped;
  for (const auto& e : cli::corpus_entries()) {
    if (!full && kSlowEntries.count(e.name)) {
      skipped.push_back(e.name);
      continue;
    }
    auto bp = solve(e.op, Method::BP);
    auto ip = solve(e.op, Method::IP);
    auto hp = solve(e.op, Method::HP);
    c.require(same_blocks(bp, ip) && same_blocks(ip, hp), "(b) methods disagree on " + e.name);
    ++compared;
  }
  c.note("(b) " + std::to_string(compared) + " entries" +
         (skipped.empty() ? "" : " (use --full to add " + join(skipped, ", ") + ")"));
}

// (c)
void suite_planted(Check& c) {
  for (std::uint32_t seed = 0; seed < 25; ++seed) {
    auto pl = corpus::planted_lclm(seed);
    for (Method m : {Method::BP, Method::IP, Method::HP}) {
      auto blocks = solve(pl.op, m);
      for (const auto& u : pl.planted)
        c.require(has_member(blocks, u), "(c) seed " + std::to_string(seed) + " " + method_name(m) + " misses " +
                                             u.to_string());
    }
  }
  c.note("(c) 25 seeds");
}

// (d)
void suite_minimal_basis(Check& c) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), msz(1, 4), ssz(1, 30);
  auto brute_dim = [](const std::vector<TruncatedSeries>& f, int sigma, int D) {
    const int m = static_cast<int>(f.size());
    RatMatrix A(sigma, std::vector<Rational>(m * (D + 1), Rational(0)));
    for (int n = 0; n < sigma; ++n)
      for (int j = 0; j < m; ++j)
        for (int e = 0; e <= D && e <= n; ++e) A[n][j * (D + 1) + e] = f[j].coeff(n - e);
    return m * (D + 1) - rank(A);
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int m = msz(rng), sigma = ssz(rng);
    std::vector<TruncatedSeries> f(m);
    for (auto& s : f) {
      s.c.resize(sigma);
      for (auto& v : s.c) v = coef(rng);
      if (trial % 3 == 0 && &s != &f[0]) s = f[0];
    }
    auto B = minimal_basis(f, sigma);
    for (const auto& w : B.rows) c.require(annihilates(w, f, sigma), "(d) basis row is not a syzygy");
    for (int D = 0; D <= sigma / m + 3; ++D) {
      int predicted = 0;
      for (int i = 0; i < m; ++i) predicted += std::max(0, D - B.row_degrees[i] + 1);
      c.require(brute_dim(f, sigma, D) == predicted, "(d) dimension mismatch at trial " + std::to_string(trial));
    }
  }
  c.note("(d) 40 trials");
}

// (e)
void suite_kernel(Check& c) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4), nsz(1, 4), dsz(0, 3);
  int full_rank = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = nsz(rng);
    PolyMatrix omega(n + 1, std::vector<Poly>(n));
    for (auto& row : omega)
      for (auto& e : row) {
        std::vector<Rational> v(dsz(rng) + 1);
        for (auto& x : v) x = coef(rng);
        e = Poly(v);
      }
    if (trial % 10 == 0)
      for (int i = 0; i <= n; ++i) omega[i][n - 1] = omega[i][0] * P({1, 1});
    auto ker = left_kernel(omega);
    if (rank_ratfun(omega) < n) {
      bool threw = false;
      try {
        kernel_cramer(omega);
      } catch (const std::domain_error&) {
        threw = true;
      }
      c.require(threw, "(e) rank-deficient matrix accepted");
      continue;
    }
    ++full_rank;
    auto K = kernel_cramer(omega);
    c.require(ker.size() == 1, "(e) elimination kernel is not a line");
    if (ker.size() != 1) continue;
    for (int j = 0; j < n; ++j) {
      Poly acc;
      for (int i = 0; i <= n; ++i) acc += K[i] * omega[i][j];
      c.require(acc.is_zero(), "(e) Cramer vector is not in the kernel");
    }
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) c.require(K[i] * ker[0][j] == K[j] * ker[0][i], "(e) kernels not proportional");
  }
  c.note("(e) 100 matrices, " + std::to_string(full_rank) + " of full rank");
}

Poly random_poly(std::mt19937& rng, int deg, int height) {
  std::uniform_int_distribution<int> d(-height, height);
  std::vector<Rational> v(deg + 1);
  for (auto& x : v) x = d(rng);
  if (v.back() == 0) v.back() = 1;
  return Poly(v);
}

// (f)
void suite_graeffe(Check& c) {
  std::mt19937 rng(9);
  int irreducible = 0;
  while (irreducible < 20) {
    Poly f = random_poly(rng, 1 + rng() % 4, 6), g = random_poly(rng, 1 + rng() % 4, 6);
    auto ff = factor(f);
    if (ff.factors.size() != 1 || ff.factors[0].second != 1) continue;
    const int b = 2 + rng() % 3;
    c.require(graeffe(f * g, b) == graeffe(f, b) * graeffe(g, b), "(f) not multiplicative");
    c.require(graeffe(f, b) == graeffe_newton(f, b), "(f) resultant and power-sum forms differ");
    const Poly u = f.monic();
    for (int i = 0; i <= 2; ++i) {
      Poly v = u;
      for (int k = 0; k < i; ++k) v = v.compose_pow(b);
      for (int k = 0; k < i; ++k) v = graeffe(v, b);
      c.require(squarefree_part(v) == u, "(f) squarefree iterate differs");
    }
    ++irreducible;
  }
  c.note("(f) 20 irreducibles");
}

// (g)
void suite_bgpf(Check& c) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-2, 2), deg(0, 3), pick(0, 3), rr(2, 4), bb(2, 3);
  const Poly pool[] = {P({1, 1}), P({-1, 1}), P({1, 0, 1}), P({-1, 0, 1}), P({1, 1, 1}), P({0, 1})};
  auto random_monic = [&]() {
    Poly p(1);
    for (int i = deg(rng); i > 0; --i) p *= pool[pick(rng) + (coef(rng) > 0 ? 2 : 0)];
    if (coef(rng) == 2) p *= random_poly(rng, deg(rng) + 1, 2);
    return p.monic();
  };
  auto constant_gcd = [](const Poly& a, const Poly& b) { return gcd(a, b).deg() == 0; };
  for (int done = 0; done < 50; ++done) {
    Poly A = random_monic(), B = random_monic();
    const Poly g = gcd(A, B);
    A = exact_div(A, g);
    B = exact_div(B, g);
    const int r = rr(rng), b = bb(rng);
    const GPForm f = bgpf_from_rational(A, B, r, b);
    c.require(check_bgpf(f, RatFun(A, B)), "(g) check_bgpf rejects its own form");
    // Reconstruction and coprimality, evaluated directly.
    int br1 = 1;
    for (int i = 0; i < r - 1; ++i) br1 *= b;
    const RatFun lhs(A.compose_pow(br1), B.compose_pow(br1));
    const RatFun rhs = RatFun(f.zeta) * RatFun(f.C.compose_pow(b), f.C) * RatFun(f.A.compose_pow(br1), f.B);
    c.require(lhs == rhs, "(g) form does not reconstruct u");
    c.require(constant_gcd(f.A.compose_pow(br1), f.C) && constant_gcd(f.B, f.C.compose_pow(b)),
              "(g) C not coprime");
    Poly MA = f.A;
    for (int i = 0; i < r; ++i, MA = MA.compose_pow(b)) c.require(constant_gcd(MA, f.B), "(g) A, B not coprime");
  }
  c.note("(g) 50 forms");
}

// (h)
void suite_newton(Check& c) {
  auto brute_hull = [](const std::vector<std::pair<long, long>>& pts, bool lower) {
    std::vector<std::pair<long, long>> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      bool vertex = true;
      for (std::size_t a = 0; a < pts.size() && vertex; ++a)
        for (std::size_t d = 0; d < pts.size() && vertex; ++d) {
          if (!(pts[a].first < pts[i].first && pts[i].first < pts[d].first)) continue;
          long dx = pts[d].first - pts[a].first;
          long seg = pts[a].second * (pts[d].first - pts[i].first) + pts[d].second * (pts[i].first - pts[a].first);
          long val = pts[i].second * dx;
          if (lower ? val >= seg : val <= seg) vertex = false;
        }
      if (vertex) out.push_back(pts[i]);
    }
    return out;
  };
  std::mt19937 rng(21);
  for (int it = 0; it < 60; ++it) {
    const int b = 2 + rng() % 3, r = 1 + rng() % 4;
    std::vector<Poly> coeffs(r + 1);
    for (int k = 0; k <= r; ++k) {
      if (k > 0 && k < r && rng() % 3 == 0) continue;
      int v = rng() % 6, d = v + rng() % 5;
      coeffs[k] = Poly::x(v) + Poly::x(d) * Rational(2);
    }
    const MahlerOperator L(b, coeffs);
    for (bool lower : {true, false}) {
      std::vector<std::pair<long, long>> pts;
      long bk = 1;
      for (int k = 0; k <= L.order(); ++k, bk *= b)
        if (!L.coeff(k).is_zero()) pts.push_back({bk, lower ? L.coeff(k).val() : L.coeff(k).deg()});
      auto want = brute_hull(pts, lower);
      auto np = newton_polygon(L, lower ? Side::Lower : Side::Upper);
      bool same = np.vertices.size() == want.size();
      for (std::size_t i = 0; same && i < want.size(); ++i)
        same = np.vertices[i].abscissa == want[i].first && np.vertices[i].ordinate == want[i].second;
      c.require(same, "(h) hull differs");
      for (const auto& e : np.edges)
        c.require(e.slope == Rational(e.right.ordinate - e.left.ordinate) /
                                 Rational(Integer(e.right.abscissa - e.left.abscissa)),
                  "(h) slope differs");
    }
  }
  c.note("(h) 60 operators");
}

Check criterion_properties(bool full) {
  Check c;
  auto t0 = Clock::now();
  suite_methods_agree(c, full);
  suite_planted(c);
  suite_residuals(c);
  suite_minimal_basis(c);
  suite_kernel(c);
  suite_graeffe(c);
  suite_bgpf(c);
  suite_newton(c);
  std::sort(c.notes.begin(), c.notes.end());
  c.note(secs(since(t0)));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  bool full = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--full") == 0) {
      full = true;
    } else {
      std::fprintf(stderr, "usage: %s [--full]\n", argv[0]);
      return 2;
    }
  }
  struct Criterion {
    int id;
    const char* title;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Stern-Brocot b=2", criterion_stern_brocot_2},
      {2, "Stern-Brocot b=4", criterion_stern_brocot_4},
      {3, "no_2s_in_3_exp", criterion_no_twos},
      {4, "Adamczewski-Faverjon", criterion_adamczewski_faverjon},
      {5, "empty solution set", criterion_empty_case},
      {6, "transcendence corpus", criterion_transcendence},
      {7, "syzygy rank", criterion_syzygy_rank},
      {8, "ramified case", criterion_ramified},
      {9, "property suites", [full] { return criterion_properties(full); }},
  };
  int passed = 0;
  std::vector<int> unexpected, known;
  for (const auto& cr : criteria) {
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    std::string line = std::string(ok ? "PASS" : "FAIL") + " " + std::to_string(cr.id) + " " + cr.title + ": ";
    line += ok ? join(c.notes, "; ") : join(c.failures, "; ") + (c.notes.empty() ? "" : " | " + join(c.notes, "; "));
    if (!ok && kKnownFailures.count(cr.id)) line += " [known failure]";
    std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    if (ok) ++passed;
    else if (kKnownFailures.count(cr.id)) known.push_back(cr.id);
    else unexpected.push_back(cr.id);
  }
  std::printf("%d/%zu criteria passed", passed, criteria.size());
  if (!known.empty()) {
    std::printf("; known failures:");
    for (int id : known) std::printf(" %d", id);
  }
  std::printf("\n");
  return unexpected.empty() ? 0 : 1;
}
