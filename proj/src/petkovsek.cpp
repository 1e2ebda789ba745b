#include "msolve/petkovsek.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "msolve/polymat.hpp"

namespace msolve {

namespace {

constexpr std::uint64_t kPrime = 4294967291ULL;  // 2^32 - 5

std::uint64_t mod_of(const Integer& v) {
  Integer r = v % Integer(static_cast<unsigned long>(kPrime));
  if (r < 0) r += static_cast<unsigned long>(kPrime);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = r * a % kPrime;
    a = a * a % kPrime;
    e >>= 1;
  }
  return r;
}

long ipow(long b, int k) {
  long r = 1;
  while (k-- > 0) r *= b;
  return r;
}

// Rows of the linear system for the coefficients of C, with integer entries.
struct PolySystem {
  int cols = 0;
  int rows = 0;
  std::vector<std::vector<Integer>> coeffs;  // weighted coefficient polynomials, one per k
  std::vector<long> bk;
};

PolySystem build_system(const MahlerOperator& Lt, const Rational& zeta, int Delta) {
  PolySystem sys;
  const int r = Lt.order();
  sys.cols = Delta + 1;
  Integer zn = zeta.get_num(), zd = zeta.get_den();
  for (int k = 0; k <= r; ++k) {
    Integer w = 1;
    for (int i = 0; i < k; ++i) w *= zn;
    for (int i = k; i < r; ++i) w *= zd;
    const Poly& lk = Lt.coeff(k);
    Rational den = Rational(lk.denominator_lcm());
    std::vector<Integer> c;
    for (int j = 0; j <= lk.deg(); ++j) {
      Rational v = lk.coeff(j) * den;
      c.push_back(v.get_num() * w);
    }
    sys.coeffs.push_back(c);
    sys.bk.push_back(ipow(Lt.radix(), k));
    sys.rows = std::max<long>(sys.rows, lk.deg() + sys.bk.back() * Delta + 1);
  }
  return sys;
}

std::vector<Integer> system_row(const PolySystem& sys, int n) {
  std::vector<Integer> row(sys.cols, Integer(0));
  for (std::size_t k = 0; k < sys.coeffs.size(); ++k) {
    const auto& c = sys.coeffs[k];
    for (int i = 0; i < sys.cols; ++i) {
      long j = n - sys.bk[k] * i;
      if (j < 0) break;
      if (j < static_cast<long>(c.size())) row[i] += c[j];
    }
  }
  return row;
}

// Indices of rows independent modulo the prime.
std::vector<int> independent_rows_mod(const PolySystem& sys) {
  std::vector<std::vector<std::uint64_t>> basis;  // reduced rows with pivot at pivcol
  std::vector<int> pivcol, chosen;
  for (int n = 0; n < sys.rows && static_cast<int>(basis.size()) < sys.cols; ++n) {
    auto irow = system_row(sys, n);
    std::vector<std::uint64_t> v(sys.cols);
    bool nz = false;
    for (int i = 0; i < sys.cols; ++i) {
      v[i] = mod_of(irow[i]);
      nz |= v[i] != 0;
    }
    if (!nz) continue;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::uint64_t f = v[pivcol[b]];
      if (!f) continue;
      for (int i = 0; i < sys.cols; ++i)
        if (basis[b][i]) v[i] = (v[i] + kPrime - f * basis[b][i] % kPrime) % kPrime;
    }
    int pc = -1;
    for (int i = 0; i < sys.cols; ++i)
      if (v[i]) {
        pc = i;
        break;
      }
    if (pc < 0) continue;
    std::uint64_t inv = pow_mod(v[pc], kPrime - 2);
    for (auto& e : v) e = e * inv % kPrime;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::uint64_t f = basis[b][pc];
      if (!f) continue;
      for (int i = 0; i < sys.cols; ++i)
        if (v[i]) basis[b][i] = (basis[b][i] + kPrime - f * v[i] % kPrime) % kPrime;
    }
    basis.push_back(v);
    pivcol.push_back(pc);
    chosen.push_back(n);
  }
  return chosen;
}

bool annihilates(const MahlerOperator& Lt, const Rational& zeta, const Poly& C) {
  Poly acc;
  Rational z = 1;
  for (int k = 0; k <= Lt.order(); ++k) {
    if (!Lt.coeff(k).is_zero()) acc += Lt.coeff(k) * mahler_pow(C, Lt.radix(), k) * z;
    z *= zeta;
  }
  return acc.is_zero();
}

Poly sqrt_graeffe(const Poly& q, int b) { return squarefree_part(graeffe(q, b)).monic(); }

bool divides_poly(const Poly& a, const Poly& b) { return divides(a, b); }

// All exponent vectors with lo[i] <= e[i] <= hi[i], lexicographic.
template <class F>
void for_each_exponent(const std::vector<int>& lo, const std::vector<int>& hi, F&& f) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  std::vector<int> e(lo);
  while (true) {
    f(e);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (e[i] < hi[i]) {
        ++e[i];
        for (std::size_t j = i + 1; j < n; ++j) e[j] = lo[j];
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

Poly expand_exponents(const FactoredPoly& fp, const std::vector<int>& e) {
  Poly p(1);
  for (std::size_t i = 0; i < e.size(); ++i) p *= pow(fp.factors[i].first, e[i]);
  return p;
}

bool coprime_shifts(const Poly& A, const Poly& B, int r, int b) {
  Poly MA = A;
  for (int i = 0; i < r; ++i) {
    if (gcd(MA, B).deg() > 0) return false;
    MA = MA.compose_pow(b);
  }
  return true;
}

// Largest integer among values, or -1.
int max_integer(const std::vector<Rational>& vals) {
  int best = -1;
  bool any = false;
  for (const auto& v : vals) {
    if (v.get_den() != 1) continue;
    long n = v.get_num().get_si();
    if (!any || n > best) best = static_cast<int>(n);
    any = true;
  }
  return any ? best : -1;
}

void solve_pair(const MahlerOperator& L, const DivisorPair& pr, bool basic, const AdmissibleData& ad,
                const NewtonPolygon& upper, std::vector<SolutionBlock>& out, PetkovsekStats& st) {
  const int b = L.radix(), r = L.order();
  const long E = ipow(b, r - 1);
  MahlerOperator Lt = ltilde(L, pr.A, pr.B);
  ++st.pairs;
  std::vector<Rational> zetas;
  NewtonPolygon upt;
  if (basic) {
    upt = newton_polygon(Lt, Side::Upper);
    for (const auto& e : upt.edges)
      for (const auto& z : rational_roots(e.charpoly))
        if (std::find(zetas.begin(), zetas.end(), z) == zetas.end()) zetas.push_back(z);
    std::sort(zetas.begin(), zetas.end());
  } else {
    zetas = ad.zeros;
  }
  for (const auto& zeta : zetas) {
    ++st.triples;
    std::vector<Rational> degs;
    if (basic) {
      for (const auto& e : upt.edges)
        if (e.charpoly.eval(zeta) == 0) degs.push_back(-e.slope);
    } else {
      Rational shift = Rational(Integer(E) * pr.A.deg() - pr.B.deg(), b - 1);
      shift.canonicalize();
      for (const auto& e : upper.edges)
        if (e.charpoly.eval(zeta) == 0) degs.push_back(-shift + Rational(E) * (-e.slope));
    }
    int Delta = max_integer(degs);
    if (Delta < 0) continue;
    CandidateTuple t;
    t.zeta = zeta;
    t.A = pr.A;
    t.B = pr.B;
    t.Delta = Delta;
    t.Cbasis = poly_solutions_bounded(Lt, zeta, Delta);
    if (t.Cbasis.empty()) continue;
    out.push_back(block_from_tuple(L, t));
    ++st.candidates;
  }
}

std::vector<SolutionBlock> run(const MahlerOperator& L, bool basic, PetkovsekStats* stats) {
  PetkovsekStats st;
  AdmissibleData ad = admissible_data(L);
  NewtonPolygon upper = newton_polygon(L, Side::Upper);
  std::vector<DivisorPair> pairs = basic ? coprime_pairs(L) : admissible_pairs(L);
  std::vector<SolutionBlock> found;
  for (const auto& pr : pairs) solve_pair(L, pr, basic, ad, upper, found, st);
  auto blocks = dedupe_blocks(found);
  st.blocks = static_cast<long>(blocks.size());
  if (stats) *stats = st;
  return blocks;
}

}  // namespace

MahlerOperator ltilde(const MahlerOperator& L, const Poly& A, const Poly& B) {
  const int b = L.radix(), r = L.order();
  std::vector<Poly> MA(2 * r), MB(r);
  for (int j = 0; j < 2 * r; ++j) MA[j] = mahler_pow(A, b, j);
  for (int j = 0; j < r; ++j) MB[j] = mahler_pow(B, b, j);
  std::vector<Poly> c;
  for (int k = 0; k <= r; ++k) {
    Poly t = mahler_pow(L.coeff(k), b, r - 1);
    if (!t.is_zero()) {
      if (k == 0) t = exact_div(t, MA[r - 1]);
      if (k == r) t = exact_div(t, MB[r - 1]);
      for (int j = 1; j < k; ++j) t *= MA[r - 1 + j];
      for (int j = k; j < r - 1; ++j) t *= MB[j];
    }
    c.push_back(t);
  }
  return MahlerOperator(b, c);
}

std::vector<Poly> poly_solutions_bounded(const MahlerOperator& Lt, const Rational& zeta, int Delta) {
  if (Delta < 0) return {};
  PolySystem sys = build_system(Lt, zeta, Delta);
  std::vector<int> rows = independent_rows_mod(sys);
  if (static_cast<int>(rows.size()) == sys.cols) return {};
  auto kernel_of = [&](const std::vector<int>& idx) {
    RatMatrix A;
    for (int n : idx) {
      std::vector<Rational> row;
      for (const auto& v : system_row(sys, n)) row.emplace_back(v);
      A.push_back(row);
    }
    if (A.empty()) A.push_back(std::vector<Rational>(sys.cols, Rational(0)));
    return nullspace(A);
  };
  RatMatrix ker = kernel_of(rows);
  bool ok = true;
  for (const auto& v : ker) ok = ok && annihilates(Lt, zeta, Poly(v));
  if (!ok) {
    std::vector<int> all(sys.rows);
    std::iota(all.begin(), all.end(), 0);
    ker = kernel_of(all);
  }
  std::vector<Poly> out;
  for (const auto& v : ker) out.emplace_back(v);
  return out;
}

std::vector<Poly> forbidden_factors(const Poly& q, const FactoredPoly& l0, int r, int b) {
  std::vector<Poly> out;
  Poly cur = q.monic();
  for (int s = 0; s < r; ++s) {
    if (l0.multiplicity(cur) > 0 && std::find(out.begin(), out.end(), cur) == out.end()) out.push_back(cur);
    cur = sqrt_graeffe(cur, b);
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<DivisorPair> coprime_pairs(const MahlerOperator& L) {
  const int b = L.radix(), r = L.order();
  FactoredPoly f0 = factor(L.coeff(0)), fr = factor(L.coeff(r));
  std::vector<int> lo0(f0.factors.size(), 0), hi0, lor(fr.factors.size(), 0), hir;
  for (const auto& [p, m] : f0.factors) hi0.push_back(m);
  for (const auto& [p, m] : fr.factors) hir.push_back(m);
  std::vector<DivisorPair> out;
  for_each_exponent(lor, hir, [&](const std::vector<int>& eb) {
    Poly B = expand_exponents(fr, eb);
    for_each_exponent(lo0, hi0, [&](const std::vector<int>& ea) {
      Poly A = expand_exponents(f0, ea);
      if (coprime_shifts(A, B, r, b)) out.push_back({A, B});
    });
  });
  return out;
}

std::vector<DivisorPair> admissible_pairs(const MahlerOperator& L) {
  const int b = L.radix(), r = L.order();
  const Poly& l0 = L.coeff(0);
  const Poly& lr = L.coeff(r);
  const Poly t = Poly::x(1);
  FactoredPoly f0 = factor(l0), fr = factor(lr);
  const std::size_t n0 = f0.factors.size(), nr = fr.factors.size();

  std::vector<std::vector<Poly>> forb(nr);
  for (std::size_t i = 0; i < nr; ++i) forb[i] = forbidden_factors(fr.factors[i].first, f0, r, b);

  auto quotients = [&](const FactoredPoly& fp, const Poly& l) {
    std::vector<Poly> D;
    for (const auto& [q, m] : fp.factors) {
      Poly p = sqrt_graeffe(q, b);
      if (p == t) continue;
      Poly Mp = p.compose_pow(b);
      if (!divides_poly(p, Mp)) continue;
      Poly f = exact_div(Mp, p).monic();
      if (divides_poly(f, l) && std::find(D.begin(), D.end(), f) == D.end()) D.push_back(f);
    }
    return D;
  };
  const std::vector<Poly> Dr = quotients(fr, lr), D0 = quotients(f0, l0);

  // Mp = p q with p = sqrtG q, p != q.
  auto bifactor = [&](const Poly& q) {
    Poly p = sqrt_graeffe(q, b);
    return p != q && p.compose_pow(b) == p * q;
  };
  auto forbidden_mask = [&](const Poly& Bp) {
    std::vector<char> mask(n0, 0);
    for (std::size_t i = 0; i < nr; ++i) {
      if (!divides_poly(fr.factors[i].first, Bp)) continue;
      for (const auto& p : forb[i])
        for (std::size_t j = 0; j < n0; ++j)
          if (f0.factors[j].first == p) mask[j] = 1;
    }
    return mask;
  };
  auto subset = [](const std::vector<char>& a, const std::vector<char>& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j] && !b[j]) return false;
    return true;
  };

  // The exponent of t in A is capped below b - 1 and bifactors q do not occur in A.
  std::vector<int> acheck(n0);
  for (std::size_t i = 0; i < n0; ++i) {
    const auto& [p, m] = f0.factors[i];
    acheck[i] = m;
    if (p == t)
      acheck[i] = std::min(m, b - 2);
    else if (bifactor(p))
      acheck[i] = 0;
  }

  std::vector<DivisorPair> out;
  std::vector<int> blo(nr, 0), bhi(nr);
  for (std::size_t i = 0; i < nr; ++i) bhi[i] = fr.factors[i].second;
  for_each_exponent(blo, bhi, [&](const std::vector<int>& eb) {
    Poly B = expand_exponents(fr, eb);
    const std::vector<char> own = forbidden_mask(B);
    // Replacement denominators B' with (A, B') producing the same solutions. B is dropped
    // for an A only when (A, B') is itself coprime, which holds iff A avoids F(B').
    std::vector<std::vector<char>> replaced;
    bool drop = false;
    auto replace_by = [&](const Poly& Bp) {
      auto mask = forbidden_mask(Bp);
      if (subset(mask, own))
        drop = true;
      else
        replaced.push_back(std::move(mask));
    };
    for (std::size_t i = 0; i < nr && !drop; ++i) {
      const auto& [q, m] = fr.factors[i];
      if (q == t) {
        if (eb[i] < std::max(0, m - b + 2)) replace_by(B * pow(t, b - 1));
      } else if (bifactor(q) && eb[i] < m) {
        replace_by(B * q);
      }
    }
    for (std::size_t i = 0; i < nr && !drop; ++i) {
      const Poly& p = fr.factors[i].first;
      if (eb[i] == 0 || p == t) continue;
      Poly Bp = p.compose_pow(b) * exact_div(B, p);
      if (divides_poly(Bp, lr)) replace_by(Bp);
    }
    for (std::size_t k = 0; k < Dr.size() && !drop; ++k)
      if (divides_poly(Dr[k] * B, lr)) replace_by(Dr[k] * B);
    if (drop) return;

    std::vector<int> ahi(n0);
    for (std::size_t j = 0; j < n0; ++j) ahi[j] = own[j] ? 0 : std::min(acheck[j], f0.factors[j].second);
    for_each_exponent(std::vector<int>(n0, 0), ahi, [&](const std::vector<int>& ea) {
      for (const auto& mask : replaced) {
        bool avoids = true;
        for (std::size_t j = 0; j < n0 && avoids; ++j) avoids = !(mask[j] && ea[j] > 0);
        if (avoids) return;
      }
      Poly A = expand_exponents(f0, ea);
      for (std::size_t j = 0; j < n0; ++j) {
        const Poly& p = f0.factors[j].first;
        if (p == t) continue;
        Poly Mp = p.compose_pow(b);
        if (!divides_poly(Mp, A)) continue;
        Poly Ap = p * exact_div(A, Mp);
        if (divides_poly(Ap, l0) && coprime_shifts(Ap, B, r, b)) return;
      }
      for (const auto& f : D0)
        if (divides_poly(f, A)) return;
      out.push_back({A, B});
    });
  });
  return out;
}

SolutionBlock block_from_tuple(const MahlerOperator& L, const CandidateTuple& t) {
  const int b = L.radix(), r = L.order();
  const int E = static_cast<int>(ipow(b, r - 1));
  auto descend = [&](const RatFun& f) {
    if (!f.num().divisible_exponents(E) || !f.den().divisible_exponents(E))
      throw std::logic_error("block_from_tuple: solution does not descend to x");
    return RatFun(f.num().deflate(E), f.den().deflate(E));
  };
  const Poly& C1 = t.Cbasis[0];
  RatFun u1 = descend(RatFun(C1.compose_pow(b) * t.A.compose_pow(E) * t.zeta, C1 * t.B));
  std::vector<RatFun> rho;
  Poly S(1);
  for (const auto& Ci : t.Cbasis) {
    rho.push_back(descend(RatFun(Ci, C1)));
    S = lcm(S, rho.back().den());
  }
  ParamRational u;
  const Poly MS = S.compose_pow(b);
  for (const auto& rh : rho) {
    Poly R = rh.num() * exact_div(S, rh.den());
    u.num.push_back(u1.num() * S * R.compose_pow(b));
    u.den.push_back(u1.den() * MS * R);
  }
  return make_block(u, 1);
}

std::vector<SolutionBlock> riccati_bp(const MahlerOperator& L, PetkovsekStats* stats) {
  return run(L, true, stats);
}

std::vector<SolutionBlock> riccati_ip(const MahlerOperator& L, PetkovsekStats* stats) {
  return run(L, false, stats);
}

std::vector<SolutionBlock> riccati_ramified(const MahlerOperator& L, PetkovsekMethod method,
                                            PetkovsekStats* stats) {
  AdmissibleData ad = admissible_data(L);
  int q = 1;
  for (const auto& ld : ad.lambdas) q = std::lcm(q, ld.q);
  MahlerOperator Lq = q == 1 ? L : L.ramify(q);
  auto blocks = method == PetkovsekMethod::Basic ? riccati_bp(Lq, stats) : riccati_ip(Lq, stats);
  for (auto& blk : blocks) {
    blk.q = q;
    blk = simplify_ramification(blk);
  }
  sort_blocks(blocks);
  return blocks;
}

}  // namespace msolve
