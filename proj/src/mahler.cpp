#include "msolve/mahler.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "msolve/factor.hpp"
#include "msolve/series.hpp"

namespace msolve {

namespace {

Integer ipow(int b, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

long lpow(int b, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

// Jointly clear denominators and content of a family of polynomials.
void make_primitive_family(std::vector<Poly>& v) {
  Integer den = 1;
  for (const auto& p : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.denominator_lcm().get_mpz_t());
  Integer g = 0;
  for (auto& p : v) {
    p *= Rational(den);
    for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  }
  if (g > 1)
    for (auto& p : v) p /= Rational(g);
}

}  // namespace

MahlerOperator::MahlerOperator(int radix, std::vector<Poly> coeffs) : b_(radix), c_(std::move(coeffs)) {
  if (b_ < 2) throw std::invalid_argument("MahlerOperator: radix must be at least 2");
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) throw std::invalid_argument("MahlerOperator: zero operator");
  if (c_[0].is_zero()) throw std::invalid_argument("MahlerOperator: trailing coefficient is zero");
  Poly g;
  for (const auto& p : c_) g = gcd(g, p);
  if (g.deg() > 0)
    for (auto& p : c_) p = exact_div(p, g);
  make_primitive_family(c_);
  if (c_.back().lc() < 0)
    for (auto& p : c_) p = -p;
}

int MahlerOperator::degree() const {
  int d = 0;
  for (const auto& p : c_) d = std::max(d, p.deg());
  return d;
}

MahlerOperator MahlerOperator::ramify(int q) const {
  std::vector<Poly> c;
  for (const auto& p : c_) c.push_back(p.compose_pow(q));
  return MahlerOperator(b_, c);
}

std::string MahlerOperator::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = order(); k >= 0; --k) {
    const Poly& p = c_[k];
    if (p.is_zero()) continue;
    std::string s = p.to_string(var);
    bool single_term = p.val() == p.deg();
    if (!first) {
      if (single_term && s[0] == '-') {
        os << " - ";
        s = s.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    bool wrap = !single_term;
    if (k == 0) {
      os << (wrap ? "(" + s + ")" : s);
      continue;
    }
    if (s == "1") {
    } else if (s == "-1") {
      os << "-";
    } else {
      os << (wrap ? "(" + s + ")" : s) << "*";
    }
    os << "M";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Poly mahler_pow(const Poly& p, int b, int k) { return k == 0 ? p : p.compose_pow(static_cast<int>(lpow(b, k))); }

RatFun mahler_pow(const RatFun& f, int b, int k) {
  return k == 0 ? f : f.compose_pow(static_cast<int>(lpow(b, k)));
}

OreOp::OreOp(int radix, std::vector<RatFun> coeffs) : b_(radix), c_(std::move(coeffs)) { trim(); }

OreOp::OreOp(const MahlerOperator& L) : b_(L.radix()) {
  for (const auto& p : L.coeffs()) c_.emplace_back(p);
  trim();
}

void OreOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OreOp operator+(const OreOp& a, const OreOp& b) {
  std::vector<RatFun> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return OreOp(a.b_, c);
}

OreOp operator-(const OreOp& a, const OreOp& b) {
  std::vector<RatFun> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return OreOp(a.b_, c);
}

OreOp operator*(const OreOp& a, const OreOp& b) {
  if (a.is_zero() || b.is_zero()) return OreOp(a.b_, {});
  std::vector<RatFun> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      c[i + j] += a.c_[i] * mahler_pow(b.c_[j], a.b_, static_cast<int>(i));
    }
  }
  return OreOp(a.b_, c);
}

MahlerOperator OreOp::to_mahler() const {
  Poly den(1);
  for (const auto& f : c_) den = lcm(den, f.den());
  std::vector<Poly> c;
  for (const auto& f : c_) c.push_back(f.num() * exact_div(den, f.den()));
  return MahlerOperator(b_, c);
}

std::pair<OreOp, OreOp> right_divmod(const OreOp& a, const OreOp& b) {
  if (b.is_zero()) throw std::domain_error("right_divmod: zero divisor");
  const int n = b.order();
  std::vector<RatFun> q(std::max(0, a.order() - n + 1));
  std::vector<RatFun> r = a.coeffs();
  for (int m = a.order(); m >= n; --m) {
    if (r[m].is_zero()) continue;
    int k = m - n;
    RatFun c = r[m] / mahler_pow(b.coeff(n), b.radix(), k);
    q[k] = c;
    for (int j = 0; j <= n; ++j) {
      if (b.coeff(j).is_zero()) continue;
      r[k + j] -= c * mahler_pow(b.coeff(j), b.radix(), k);
    }
  }
  r.resize(std::min<std::size_t>(r.size(), n));
  return {OreOp(a.radix(), q), OreOp(a.radix(), r)};
}

bool right_divides(const MahlerOperator& f, const MahlerOperator& L) {
  return right_divmod(OreOp(L), OreOp(f)).second.is_zero();
}

MahlerOperator compose(const MahlerOperator& A, const MahlerOperator& B) {
  return (OreOp(A) * OreOp(B)).to_mahler();
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& v) { return v == 0; });
}

int TruncatedSeries::valuation() const {
  for (int i = 0; i < order(); ++i)
    if (c[i] != 0) return i;
  return -1;
}

TruncatedSeries apply_operator(const MahlerOperator& L, const TruncatedSeries& f) {
  const int n = f.order();
  TruncatedSeries out;
  out.c.assign(n, Rational(0));
  long bk = 1;
  for (int k = 0; k <= L.order(); ++k) {
    const auto& lk = L.coeff(k).coeffs();
    for (long i = 0; i * bk < n; ++i) {
      if (f.c[i] == 0) continue;
      for (std::size_t j = 0; j < lk.size() && i * bk + static_cast<long>(j) < n; ++j) {
        if (lk[j] == 0) continue;
        out.c[i * bk + j] += lk[j] * f.c[i];
      }
    }
    bk *= L.radix();
  }
  return out;
}

TruncatedSeries mahler_series(const TruncatedSeries& f, int b) {
  TruncatedSeries out;
  out.c.assign(f.order(), Rational(0));
  for (long i = 0; i * b < f.order(); ++i) out.c[i * b] = f.c[i];
  return out;
}

NewtonPolygon newton_polygon(const MahlerOperator& L, Side side) {
  NewtonPolygon np;
  np.side = side;
  const int b = L.radix();
  std::vector<Vertex> pts;
  for (int k = 0; k <= L.order(); ++k) {
    const Poly& p = L.coeff(k);
    if (p.is_zero()) continue;
    pts.push_back({k, ipow(b, k), side == Side::Lower ? p.val() : p.deg()});
  }
  // Monotone chain on points already sorted by abscissa.
  auto cross = [](const Vertex& o, const Vertex& a, const Vertex& c) {
    Integer ax = a.abscissa - o.abscissa, ay = a.ordinate - o.ordinate;
    Integer cx = c.abscissa - o.abscissa, cy = c.ordinate - o.ordinate;
    return Integer(ax * cy - ay * cx);
  };
  std::vector<Vertex> hull;
  for (const auto& pnt : pts) {
    while (hull.size() >= 2) {
      Integer cr = cross(hull[hull.size() - 2], hull.back(), pnt);
      bool drop = side == Side::Lower ? cr <= 0 : cr >= 0;
      if (!drop) break;
      hull.pop_back();
    }
    hull.push_back(pnt);
  }
  np.vertices = hull;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    Edge ed;
    ed.left = hull[e];
    ed.right = hull[e + 1];
    ed.slope = Rational(Integer(ed.right.ordinate - ed.left.ordinate), Integer(ed.right.abscissa - ed.left.abscissa));
    ed.slope.canonicalize();
    ed.intercept = Rational(ed.left.ordinate) - ed.slope * Rational(ed.left.abscissa);
    std::vector<Rational> cp(ed.right.k - ed.left.k + 1);
    for (int k = ed.left.k; k <= ed.right.k; ++k) {
      Rational j = ed.slope * Rational(ipow(b, k)) + ed.intercept;
      if (j.get_den() != 1 || j < 0) continue;
      cp[k - ed.left.k] = L.coeff(k).coeff(static_cast<int>(j.get_num().get_si()));
    }
    ed.charpoly = Poly(cp);
    np.edges.push_back(ed);
  }
  return np;
}

AdmissibleData admissible_data(const MahlerOperator& L) {
  AdmissibleData out;
  const int b = L.radix();
  NewtonPolygon lower = newton_polygon(L, Side::Lower);
  std::vector<Rational> lambdas;
  for (const auto& e : lower.edges) {
    for (const auto& [f, m] : factor(e.charpoly).factors) {
      if (f.deg() == 1) {
        Rational r = -f.coeff(0);
        if (std::find(lambdas.begin(), lambdas.end(), r) == lambdas.end()) lambdas.push_back(r);
      } else if (std::find(out.unsupported.begin(), out.unsupported.end(), f) == out.unsupported.end()) {
        out.unsupported.push_back(f);
      }
    }
  }
  std::sort(lambdas.begin(), lambdas.end());
  std::sort(out.unsupported.begin(), out.unsupported.end(), poly_less);
  for (const auto& lam : lambdas) {
    LambdaData ld;
    ld.lambda = lam;
    ld.nu = -lower.edges.front().slope;
    ld.mu = lower.edges.front().intercept;
    Integer q = 1;
    const Edge* chosen = nullptr;
    for (const auto& e : lower.edges) {
      if (e.charpoly.eval(lam) != 0) continue;
      ld.admissible.push_back(e);
      Integer d = e.slope.get_den();
      if (gcd(d, Integer(b)) != 1) continue;
      mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
      chosen = &e;
    }
    ld.q = static_cast<int>(q.get_si());
    if (!chosen) {
      ld.viable = false;
    } else {
      Rational p = -chosen->slope * Rational(q);
      ld.p = static_cast<int>(p.get_num().get_si());
      ld.c = chosen->intercept;
    }
    ld.nu_lambda = Rational(ld.q) * ld.nu - ld.p;
    ld.mu_lambda = Rational(ld.q) * (ld.mu - ld.c);
    out.lambdas.push_back(ld);
  }
  NewtonPolygon upper = newton_polygon(L, Side::Upper);
  for (const auto& e : upper.edges)
    for (const auto& z : rational_roots(e.charpoly))
      if (std::find(out.zeros.begin(), out.zeros.end(), z) == out.zeros.end()) out.zeros.push_back(z);
  std::sort(out.zeros.begin(), out.zeros.end());
  return out;
}

MahlerOperator transform_lambda_raw(const MahlerOperator& L, const LambdaData& ld) {
  const int b = L.radix();
  std::vector<Poly> c;
  long shift_min = 0;
  bool first = true;
  Rational lk = 1;
  for (int k = 0; k <= L.order(); ++k) {
    Poly p = L.coeff(k).compose_pow(ld.q) * lk;
    lk *= ld.lambda;
    long e = static_cast<long>(ld.p) * lpow(b, k);
    if (!p.is_zero()) {
      long v = p.val() + e;
      if (first || v < shift_min) shift_min = v;
      first = false;
    }
    c.push_back(p);
  }
  for (int k = 0; k <= L.order(); ++k) {
    long e = static_cast<long>(ld.p) * lpow(b, k) - shift_min;
    if (!c[k].is_zero()) c[k] = c[k].shift(static_cast<int>(e));
  }
  return MahlerOperator(b, c);
}

MahlerOperator transform_lambda(const MahlerOperator& L, LambdaData& ld) {
  MahlerOperator T = transform_lambda_raw(L, ld);
  SeriesBasis basis = series_basis(T);
  if (!basis.elements.empty()) {
    int v = -1;
    for (const auto& z : basis.elements) {
      int vz = z.valuation();
      if (vz >= 0 && (v < 0 || vz < v)) v = vz;
    }
    if (v > 0) {
      ld.p += v;
      T = transform_lambda_raw(L, ld);
    }
  }
  NewtonPolygon np = newton_polygon(T, Side::Lower);
  if (!np.edges.empty()) {
    ld.nu_lambda = -np.edges.front().slope;
    ld.mu_lambda = np.edges.front().intercept;
  } else {
    ld.nu_lambda = 0;
    ld.mu_lambda = 0;
  }
  return T;
}

RatFun riccati_residual(const MahlerOperator& L, const RatFun& u) {
  RatFun acc(L.coeff(0));
  RatFun prod(Poly(1));
  for (int i = 1; i <= L.order(); ++i) {
    prod *= mahler_pow(u, L.radix(), i - 1);
    if (!L.coeff(i).is_zero()) acc += RatFun(L.coeff(i)) * prod;
  }
  return acc;
}

Poly riccati_cleared(const MahlerOperator& L, const Poly& P, const Poly& Q) {
  const int r = L.order();
  const int b = L.radix();
  std::vector<Poly> MP(r), MQ(r);
  for (int j = 0; j < r; ++j) {
    MP[j] = mahler_pow(P, b, j);
    MQ[j] = mahler_pow(Q, b, j);
  }
  // suffix[i] = prod_{j=i}^{r-1} M^j Q
  std::vector<Poly> suffix(r + 1);
  suffix[r] = Poly(1);
  for (int j = r - 1; j >= 0; --j) suffix[j] = suffix[j + 1] * MQ[j];
  Poly acc;
  Poly prefix(1);
  for (int i = 0; i <= r; ++i) {
    if (i > 0) prefix *= MP[i - 1];
    if (!L.coeff(i).is_zero()) acc += L.coeff(i) * prefix * suffix[i];
  }
  return acc;
}

namespace {

// Row vectors over Q(x) kept as (polynomial row, polynomial denominator).
struct RatRow {
  std::vector<Poly> num;
  Poly den;
};

RatRow clear_row(const std::vector<RatFun>& v) {
  Poly den(1);
  for (const auto& f : v) den = lcm(den, f.den());
  RatRow r;
  r.den = den;
  for (const auto& f : v) r.num.push_back(f.num() * exact_div(den, f.den()));
  return r;
}

// Given rows v_0..v_K of which v_0..v_{K-1} are independent and v_K depends on them,
// return polynomial coefficients c with sum c_k v_k = 0.
std::vector<Poly> dependency(const std::vector<RatRow>& rows) {
  const int K = static_cast<int>(rows.size()) - 1;
  const int n = static_cast<int>(rows[0].num.size());
  // Pick K columns in which v_0..v_{K-1} are independent.
  std::vector<int> cols;
  for (int j = 0; j < n && static_cast<int>(cols.size()) < K; ++j) {
    std::vector<int> trial = cols;
    trial.push_back(j);
    PolyMatrix sub(K, std::vector<Poly>(trial.size()));
    for (int i = 0; i < K; ++i)
      for (std::size_t t = 0; t < trial.size(); ++t) sub[i][t] = rows[i].num[trial[t]];
    if (rank_ratfun(sub) == static_cast<int>(trial.size())) cols = trial;
  }
  PolyMatrix omega(K + 1, std::vector<Poly>(K));
  for (int i = 0; i <= K; ++i)
    for (int t = 0; t < K; ++t) omega[i][t] = rows[i].num[cols[t]];
  std::vector<Poly> k = K == 0 ? std::vector<Poly>{Poly(1)} : kernel_cramer(omega);
  // Undo the row scaling: sum k_i num_i = 0 means sum (k_i den_i) v_i = 0.
  std::vector<Poly> c(K + 1);
  Poly g;
  for (int i = 0; i <= K; ++i) {
    c[i] = k[i] * rows[i].den;
    g = gcd(g, c[i]);
  }
  for (auto& e : c) e = exact_div(e, g);
  return c;
}

bool rows_independent(const std::vector<RatRow>& rows) {
  PolyMatrix m;
  for (const auto& r : rows) m.push_back(r.num);
  return rank_ratfun(m) == static_cast<int>(rows.size());
}

// Remainder of M * (sum a_i M^i) modulo L (monic-free representation over Q(x)).
std::vector<RatFun> next_remainder(const std::vector<RatFun>& a, const OreOp& L) {
  const int b = L.radix();
  const int r = L.order();
  std::vector<RatFun> s(r + 1);
  for (int i = 0; i < r; ++i) s[i + 1] = mahler_pow(a[i], b, 1);
  if (!s[r].is_zero()) {
    RatFun c = s[r] / L.coeff(r);
    for (int j = 0; j <= r; ++j) s[j] -= c * L.coeff(j);
  }
  s.resize(r);
  return s;
}

}  // namespace

MahlerOperator lclm(const MahlerOperator& L1, const MahlerOperator& L2) {
  if (L1.radix() != L2.radix()) throw std::invalid_argument("lclm: radix mismatch");
  const int b = L1.radix();
  OreOp A(L1), B(L2);
  const int r1 = L1.order(), r2 = L2.order();
  std::vector<RatFun> a(r1), c(r2);
  if (r1 > 0) a[0] = RatFun(Poly(1));
  if (r2 > 0) c[0] = RatFun(Poly(1));
  std::vector<RatRow> rows;
  for (int k = 0; k <= r1 + r2; ++k) {
    std::vector<RatFun> v = a;
    v.insert(v.end(), c.begin(), c.end());
    rows.push_back(clear_row(v));
    bool dependent = rows.size() == 1 ? std::all_of(v.begin(), v.end(), [](const RatFun& f) { return f.is_zero(); })
                                      : !rows_independent(rows);
    if (dependent) {
      auto coef = dependency(rows);
      return MahlerOperator(b, coef);
    }
    if (r1 > 0) a = next_remainder(a, A);
    if (r2 > 0) c = next_remainder(c, B);
  }
  throw std::logic_error("lclm: no dependency found");
}

MahlerOperator lclm(const std::vector<MahlerOperator>& ops) {
  if (ops.empty()) throw std::invalid_argument("lclm: empty list");
  MahlerOperator acc = ops[0];
  for (std::size_t i = 1; i < ops.size(); ++i) acc = lclm(acc, ops[i]);
  return acc;
}

MahlerOperator annihilator_from_system(const PolyMatrix& A, const std::vector<Poly>& R, int b) {
  const int n = static_cast<int>(A.size());
  Poly d = det(A);
  if (d.is_zero()) throw std::domain_error("annihilator_from_system: singular matrix");
  // adj(A)
  PolyMatrix adj(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PolyMatrix minor;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Poly> row;
        for (int c = 0; c < n; ++c)
          if (c != i) row.push_back(A[r][c]);
        minor.push_back(row);
      }
      Poly m = n == 1 ? Poly(1) : det(minor);
      adj[i][j] = ((i + j) % 2 == 0) ? m : -m;
    }
  // M^k y = v_k . Y with v_{k+1} = M(v_k) A^{-1}.
  std::vector<RatFun> v(R.begin(), R.end());
  std::vector<RatRow> rows;
  for (int k = 0; k <= n; ++k) {
    rows.push_back(clear_row(v));
    if (k > 0 && !rows_independent(rows)) return MahlerOperator(b, dependency(rows));
    const RatRow& cur = rows.back();
    Poly mden = mahler_pow(cur.den, b, 1) * d;
    std::vector<RatFun> next(n);
    for (int j = 0; j < n; ++j) {
      Poly s;
      for (int i = 0; i < n; ++i) s += mahler_pow(cur.num[i], b, 1) * adj[i][j];
      next[j] = RatFun(s, mden);
    }
    v = next;
  }
  throw std::logic_error("annihilator_from_system: no dependency found");
}

DegreeBounds degree_bounds(int b, int r, int d) {
  DegreeBounds db;
  if (b == 2) {
    db.b_num = Rational(2 * d);
    db.b_den = Rational(2 * d) * (1 - Rational(1, Integer(ipow(2, r))));
  } else {
    Rational br = Rational(ipow(b, r - 1));
    db.b_num = Rational(4 * d) / br;
    db.b_den = Rational(3 * d) / br;
  }
  db.b_num.canonicalize();
  db.b_den.canonicalize();
  db.b_inf = std::max(db.b_num, db.b_den);
  return db;
}

MahlerOperator first_order(int b, const RatFun& u) { return MahlerOperator(b, {-u.num(), u.den()}); }

}  // namespace msolve
