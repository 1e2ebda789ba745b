#include "msolve/riccati_hp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "msolve/series.hpp"

namespace msolve {

namespace {

PolyMatrix columns(const PolyMatrix& A, const std::vector<int>& cols) {
  PolyMatrix out;
  for (const auto& row : A) {
    std::vector<Poly> r;
    for (int c : cols) r.push_back(row[c]);
    out.push_back(r);
  }
  return out;
}

// Determinants of W restricted to column subsets, memoized.
class MinorCache {
 public:
  explicit MinorCache(const PolyMatrix& W) : W_(W) {}
  const Poly& operator()(const std::vector<int>& cols) {
    auto it = memo_.find(cols);
    if (it != memo_.end()) return it->second;
    Poly d = cols.empty() ? Poly(1) : det(columns(W_, cols));
    return memo_.emplace(cols, std::move(d)).first->second;
  }

 private:
  const PolyMatrix& W_;
  std::map<std::vector<int>, Poly> memo_;
};

std::vector<int> without(const std::vector<int>& v, std::size_t i) {
  std::vector<int> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != i) out.push_back(v[k]);
  return out;
}

void check_shape(const FilteredMatrix& W, int N) {
  if (W.rho != static_cast<int>(W.W.size())) throw std::invalid_argument("filtered matrix: rho does not match rows");
  for (const auto& row : W.W)
    if (static_cast<int>(row.size()) != 2 * N) throw std::invalid_argument("filtered matrix: expected 2N columns");
}

}  // namespace

std::vector<MultiPoly> minor_system(const FilteredMatrix& W, int N) {
  check_shape(W, N);
  const int rho = W.rho;
  if (rho < 1 || rho > 2 * N - 2) throw std::invalid_argument("minor_system: rho out of range");
  const int m = 2 * N, k = rho + 2;
  MinorCache minor(W.W);
  std::set<MultiPoly, bool (*)(const MultiPoly&, const MultiPoly&)> seen(
      [](const MultiPoly& a, const MultiPoly& b) { return a.terms() < b.terms(); });
  std::vector<MultiPoly> out;
  // Column subsets of size rho + 2 in lexicographic order.
  std::vector<int> C(k);
  for (int i = 0; i < k; ++i) C[i] = i;
  while (true) {
    // Expansion along the two parameter rows: only pairs c1 < N <= c2 contribute a_{c1} a_{c2-N}.
    std::map<int, MultiPoly> coeffs;
    for (int p1 = 0; p1 < k; ++p1) {
      if (C[p1] >= N) break;
      for (int p2 = p1 + 1; p2 < k; ++p2) {
        if (C[p2] < N) continue;
        std::vector<int> rest;
        for (int t = 0; t < k; ++t)
          if (t != p1 && t != p2) rest.push_back(C[t]);
        const Poly& d = minor(rest);
        if (d.is_zero()) continue;
        // (-1)^{(rho+1)+(rho+2)+(p1+1)+(p2+1)}
        const bool neg = (p1 + p2 + 1) % 2 != 0;
        Monomial mono(N, 0);
        ++mono[C[p1]];
        ++mono[C[p2] - N];
        for (int e = 0; e <= d.deg(); ++e) {
          if (d.coeffs()[e] == 0) continue;
          auto [it, fresh] = coeffs.try_emplace(e, N);
          it->second.add_term(mono, neg ? Rational(-d.coeffs()[e]) : d.coeffs()[e]);
        }
      }
    }
    for (auto& [e, f] : coeffs) {
      if (f.is_zero()) continue;
      MultiPoly g = f.monic(MonomialOrder::GrevLex);
      if (seen.insert(g).second) out.push_back(g);
    }
    int i = k - 1;
    while (i >= 0 && C[i] == m - k + i) --i;
    if (i < 0) break;
    ++C[i];
    for (int j = i + 1; j < k; ++j) C[j] = C[j - 1] + 1;
  }
  return out;
}

ParamRational candidate_full(const FilteredMatrix& W, int N) {
  check_shape(W, N);
  if (W.rho != 2 * N - 1) throw std::invalid_argument("candidate_full: rank must be 2N - 1");
  MinorCache minor(W.W);
  std::vector<int> all(2 * N);
  for (int i = 0; i < 2 * N; ++i) all[i] = i;
  // Delta_i with column i removed, 1-based i; K_i = (-1)^{i+1} Delta_i.
  auto K = [&](int i) {
    Poly d = minor(without(all, i - 1));
    return (i % 2 == 0) ? Poly(-d) : d;
  };
  ParamRational u;
  for (int i = 1; i <= N; ++i) {
    u.num.push_back(K(i + N));
    u.den.push_back(K(i));
  }
  bool num_zero = true, den_zero = true;
  for (int i = 0; i < N; ++i) {
    num_zero = num_zero && u.num[i].is_zero();
    den_zero = den_zero && u.den[i].is_zero();
  }
  if (num_zero || den_zero) throw std::domain_error("candidate_full: generating matrix is rank deficient");
  return normalize(u);
}

std::variant<ParamRational, RetrySignal> candidate_component(const FilteredMatrix& W, const RatMatrix& S) {
  const int rho = W.rho;
  if (S.empty()) throw std::invalid_argument("candidate_component: empty parametrization");
  const int N = static_cast<int>(S[0].size());
  check_shape(W, N);
  if (rho < 1 || rho > 2 * N - 2) throw std::invalid_argument("candidate_component: rho out of range");
  if (rank(S) != static_cast<int>(S.size())) throw std::invalid_argument("candidate_component: S must have full rank");
  const int v = static_cast<int>(S.size());
  const int m = 2 * N;

  // Column selection on random specializations of g. A rank reached at one point is the generic
  // rank, since the minors of order rho + 2 vanish on the whole component.
  std::mt19937 rng(0xc0fe);
  std::uniform_int_distribution<int> dist(-50, 50);
  std::vector<int> best;
  for (int attempt = 0; attempt < 3 && static_cast<int>(best.size()) < rho + 1; ++attempt) {
    std::vector<Rational> a(N, Rational(0));
    for (int t = 0; t < v; ++t) {
      Rational g = dist(rng);
      for (int j = 0; j < N; ++j) a[j] += g * S[t][j];
    }
    PolyMatrix Wa = W.W;
    std::vector<Poly> r1(m), r2(m);
    for (int j = 0; j < N; ++j) {
      r1[j] = Poly(a[j]);
      r2[j + N] = Poly(a[j]);
    }
    Wa.push_back(r1);
    Wa.push_back(r2);
    std::vector<int> sel;
    int r = 0;
    for (int c = 0; c < m && r < rho + 2; ++c) {
      sel.push_back(c);
      int rr = rank_ratfun(columns(Wa, sel));
      if (rr > r) {
        r = rr;
      } else {
        sel.pop_back();
      }
    }
    if (r == rho + 2) return RetrySignal{"component is not contained in the relaxed cone"};
    if (sel.size() > best.size()) best = sel;
  }
  if (static_cast<int>(best.size()) < rho + 1) return RetrySignal{"left kernel has dimension 2"};

  // P = det [W_sel; (0, gS)], Q = det [W_sel; (gS, 0)], expanded along the last row.
  MinorCache minor(W.W);
  ParamRational u;
  u.num.assign(v, Poly());
  u.den.assign(v, Poly());
  for (int p = 0; p <= rho; ++p) {
    const int c = best[p];
    Poly d = minor(without(best, p));
    if (d.is_zero()) continue;
    // (-1)^{(rho+1)+(p+1)}
    if ((rho + p) % 2 != 0) d = -d;
    for (int t = 0; t < v; ++t) {
      if (c < N) {
        if (S[t][c] != 0) u.den[t] += d * S[t][c];
      } else if (S[t][c - N] != 0) {
        u.num[t] += d * S[t][c - N];
      }
    }
  }
  bool num_zero = true, den_zero = true;
  for (int t = 0; t < v; ++t) {
    num_zero = num_zero && u.num[t].is_zero();
    den_zero = den_zero && u.den[t].is_zero();
  }
  if (num_zero || den_zero) return RetrySignal{"kernel row has a zero entry in the parameter rows"};
  return normalize(u);
}

Verdict validate_candidate(const MahlerOperator& L_lambda, const ParamRational& cand, const DegreeBounds& bounds) {
  if (Rational(num_degree(cand)) > bounds.b_num || Rational(den_degree(cand)) > bounds.b_den)
    return Verdict::RejectedDegree;
  return riccati_vanishes(L_lambda, cand) ? Verdict::Accepted : Verdict::RejectedResidual;
}

namespace {

bool same_family(const ParamRational& a, const ParamRational& b) {
  return a.params() == b.params() && family_contains(a, b) && family_contains(b, a);
}

// u_L(t) = lambda t^{(b-1)p} u_T(t) with t = x^{1/q}.
SolutionBlock map_back(const ParamRational& u, const LambdaData& ld, int b) {
  ParamRational w = u;
  const int e = (b - 1) * ld.p;
  for (int t = 0; t < w.params(); ++t) {
    w.num[t] *= ld.lambda;
    if (e >= 0)
      w.num[t] = w.num[t].shift(e);
    else
      w.den[t] = w.den[t].shift(-e);
  }
  return simplify_ramification(make_block(w, ld.q));
}

class LambdaRun {
 public:
  LambdaRun(const MahlerOperator& L, LambdaData ld, const HPOptions& opts, HPStats& stats)
      : L_(L), ld_(std::move(ld)), opts_(opts), stats_(stats) {}

  std::vector<SolutionBlock> run() {
    T_ = transform_lambda(L_, ld_);
    int sigma0 = 1;
    if (ld_.nu_lambda >= 0) {
      Integer f = ld_.nu_lambda.get_num() / ld_.nu_lambda.get_den();
      sigma0 = static_cast<int>(f.get_si()) + 1;
    }
    sigma0 = std::max({sigma0, free_prefix(T_), 1});
    SeriesBasis basis = series_basis(T_, sigma0);
    N_ = basis.dim();
    if (N_ == 0) {
      note(sigma0, 0, "no series solutions");
      return {};
    }
    bounds_ = degree_bounds(T_.radix(), T_.order(), T_.degree());
    int sigma = 0;
    double target = sigma0;
    while (true) {
      sigma = std::max(sigma + 1, static_cast<int>(std::lround(target)));
      target *= opts_.growth;
      if (sigma > opts_.sigma_cap)
        throw ResourceLimit("sigma " + std::to_string(sigma) + " exceeds the cap " + std::to_string(opts_.sigma_cap) +
                            " for lambda = " + ld_.lambda.get_str());
      ++stats_.iterations;
      basis = extend_basis(T_, basis, sigma);
      auto f = riccati_columns(basis.elements, T_.radix(), sigma);
      FilteredMatrix W = filtered_matrix(minimal_basis(f, sigma), bounds_.b_inf);
      if (iterate(W, sigma)) break;
    }
    std::vector<SolutionBlock> out;
    for (const auto& u : accepted_) out.push_back(map_back(u, ld_, L_.radix()));
    return out;
  }

 private:
  void note(int sigma, int rho, const std::string& what) {
    stats_.trace.push_back({ld_.lambda, sigma, N_, rho, what});
  }

  // True when this sigma settles the leading coefficient.
  bool iterate(const FilteredMatrix& W, int sigma) {
    const int rho = W.rho;
    if (rho == 0) {
      note(sigma, rho, "no syzygies");
      return true;
    }
    if (rho == 2 * N_) {
      note(sigma, rho, "full rank");
      return false;
    }
    std::vector<ParamRational> cands;
    if (rho == 2 * N_ - 1) {
      cands.push_back(candidate_full(W, N_));
    } else {
      auto dec = linear_decompose(minor_system(W, N_), N_);
      if (auto* nl = std::get_if<NonLinearSignal>(&dec)) {
        ++stats_.retries;
        note(sigma, rho, "nonlinear component: " + nl->reason);
        return false;
      }
      for (const auto& comp : std::get<std::vector<LinearComponent>>(dec)) {
        auto S = parametrize(comp);
        if (!S) continue;
        auto c = candidate_component(W, *S);
        if (auto* rs = std::get_if<RetrySignal>(&c)) {
          ++stats_.retries;
          note(sigma, rho, "retry: " + rs->reason);
          return false;
        }
        cands.push_back(std::get<ParamRational>(c));
      }
    }
    for (const auto& u : cands) {
      bool known = false;
      for (const auto& a : accepted_) known = known || same_family(a, u);
      if (known) continue;
      ++stats_.candidates;
      Verdict v = validate_candidate(T_, u, bounds_);
      if (v != Verdict::Accepted) {
        ++stats_.rejected;
        note(sigma, rho,
             v == Verdict::RejectedDegree ? "candidate over degree bounds (" + std::to_string(num_degree(u)) + ", " +
                                                std::to_string(den_degree(u)) + ")"
                                          : "candidate fails the Riccati equation");
        return false;
      }
      accepted_.push_back(u);
    }
    note(sigma, rho, "all candidates accepted (" + std::to_string(cands.size()) + ")");
    return true;
  }

  const MahlerOperator& L_;
  LambdaData ld_;
  const HPOptions& opts_;
  HPStats& stats_;
  MahlerOperator T_;
  int N_ = 0;
  DegreeBounds bounds_;
  std::vector<ParamRational> accepted_;
};

}  // namespace

HPResult riccati_hp_run(const MahlerOperator& L, const HPOptions& opts) {
  HPResult res;
  AdmissibleData ad = admissible_data(L);
  res.unsupported = ad.unsupported;
  for (const auto& ld : ad.lambdas) {
    if (!ld.viable) continue;
    auto blocks = LambdaRun(L, ld, opts, res.stats).run();
    res.blocks.insert(res.blocks.end(), blocks.begin(), blocks.end());
  }
  res.blocks = dedupe_blocks(std::move(res.blocks));
  return res;
}

std::vector<SolutionBlock> riccati_hp(const MahlerOperator& L) { return riccati_hp_run(L).blocks; }

}  // namespace msolve
