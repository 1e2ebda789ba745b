#include "msolve/orderbasis.hpp"

#include <algorithm>
#include <stdexcept>

namespace msolve {

namespace {

// Integer row: polynomial entries and the residual series, kept primitive.
struct IntRow {
  std::vector<std::vector<Integer>> P;
  std::vector<Integer> res;
  int d = 0;
};

void make_primitive(IntRow& r, int from) {
  Integer g = 0;
  auto acc = [&](const Integer& v) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g == 1;
  };
  for (const auto& e : r.P)
    for (const auto& v : e)
      if (acc(v)) return;
  for (std::size_t e = from; e < r.res.size(); ++e)
    if (acc(r.res[e])) return;
  if (g == 0) return;
  for (auto& e : r.P)
    for (auto& v : e)
      if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  for (std::size_t e = from; e < r.res.size(); ++e)
    if (r.res[e] != 0) mpz_divexact(r.res[e].get_mpz_t(), r.res[e].get_mpz_t(), g.get_mpz_t());
}

}  // namespace

ApproxSyzygyBasis minimal_basis(const std::vector<TruncatedSeries>& f, int sigma) {
  const int m = static_cast<int>(f.size());
  for (const auto& s : f)
    if (s.order() < sigma) throw std::invalid_argument("minimal_basis: series known to insufficient order");
  // Scale each series to integer coefficients; column j of a syzygy is rescaled at the end.
  std::vector<Integer> scale(m, Integer(1));
  std::vector<IntRow> R(m);
  for (int i = 0; i < m; ++i) {
    for (int n = 0; n < sigma; ++n) mpz_lcm(scale[i].get_mpz_t(), scale[i].get_mpz_t(), f[i].c[n].get_den_mpz_t());
    R[i].P.assign(m, {});
    R[i].P[i] = {Integer(1)};
    R[i].res.resize(sigma);
    for (int n = 0; n < sigma; ++n) R[i].res[n] = f[i].c[n].get_num() * (scale[i] / f[i].c[n].get_den());
  }
  Integer a, c, g, t;
  for (int k = 0; k < sigma; ++k) {
    int piv = -1;
    for (int i = 0; i < m; ++i) {
      if (R[i].res[k] == 0) continue;
      if (piv < 0 || R[i].d < R[piv].d) piv = i;
    }
    if (piv < 0) continue;
    const IntRow& rp = R[piv];
    for (int i = 0; i < m; ++i) {
      if (i == piv || R[i].res[k] == 0) continue;
      IntRow& ri = R[i];
      mpz_gcd(g.get_mpz_t(), rp.res[k].get_mpz_t(), ri.res[k].get_mpz_t());
      mpz_divexact(a.get_mpz_t(), rp.res[k].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(c.get_mpz_t(), ri.res[k].get_mpz_t(), g.get_mpz_t());
      // ri = a * ri - c * rp
      for (int j = 0; j < m; ++j) {
        auto& dst = ri.P[j];
        const auto& src = rp.P[j];
        if (src.size() > dst.size()) dst.resize(src.size());
        for (std::size_t e = 0; e < dst.size(); ++e) {
          if (a != 1 && dst[e] != 0) dst[e] *= a;
          if (e < src.size() && src[e] != 0) mpz_submul(dst[e].get_mpz_t(), c.get_mpz_t(), src[e].get_mpz_t());
        }
        while (!dst.empty() && dst.back() == 0) dst.pop_back();
      }
      ri.res[k] = 0;
      for (int e = k + 1; e < sigma; ++e) {
        if (a != 1 && ri.res[e] != 0) ri.res[e] *= a;
        if (rp.res[e] != 0) mpz_submul(ri.res[e].get_mpz_t(), c.get_mpz_t(), rp.res[e].get_mpz_t());
      }
      make_primitive(ri, k + 1);
    }
    IntRow& pr = R[piv];
    for (int j = 0; j < m; ++j)
      if (!pr.P[j].empty()) pr.P[j].insert(pr.P[j].begin(), Integer(0));
    for (int e = sigma - 1; e > k; --e) pr.res[e].swap(pr.res[e - 1]);
    pr.res[k] = 0;
    ++pr.d;
  }
  std::vector<std::vector<std::vector<Rational>>> P(m, std::vector<std::vector<Rational>>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (const auto& v : R[i].P[j]) P[i][j].push_back(Rational(v * scale[j]));
  ApproxSyzygyBasis out;
  out.sigma = sigma;
  for (int i = 0; i < m; ++i) {
    std::vector<Poly> row;
    int deg = -1;
    for (int j = 0; j < m; ++j) {
      row.emplace_back(P[i][j]);
      deg = std::max(deg, row.back().deg());
    }
    // Unit leading coefficient at the pivot: rightmost entry of maximal degree.
    int pc = -1;
    for (int j = 0; j < m; ++j)
      if (row[j].deg() == deg) pc = j;
    Rational l = row[pc].lc();
    for (auto& p : row) p /= l;
    out.rows.push_back(row);
    out.row_degrees.push_back(deg);
  }
  // Order rows by (degree, pivot column) for determinism.
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  auto pivot = [&](int i) {
    int pc = -1;
    for (int j = 0; j < m; ++j)
      if (out.rows[i][j].deg() == out.row_degrees[i]) pc = j;
    return pc;
  };
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (out.row_degrees[a] != out.row_degrees[b]) return out.row_degrees[a] < out.row_degrees[b];
    return pivot(a) < pivot(b);
  });
  ApproxSyzygyBasis sorted;
  sorted.sigma = sigma;
  sorted.f = f;
  for (int i : idx) {
    sorted.rows.push_back(out.rows[i]);
    sorted.row_degrees.push_back(out.row_degrees[i]);
  }
  return sorted;
}

FilteredMatrix filtered_matrix(const ApproxSyzygyBasis& basis, const Rational& b_inf) {
  FilteredMatrix fm;
  fm.b_inf = b_inf;
  fm.sigma = basis.sigma;
  for (std::size_t i = 0; i < basis.rows.size(); ++i)
    if (Rational(basis.row_degrees[i]) <= b_inf) fm.W.push_back(basis.rows[i]);
  fm.rho = static_cast<int>(fm.W.size());
  return fm;
}

std::vector<TruncatedSeries> riccati_columns(const std::vector<TruncatedSeries>& z, int b, int sigma) {
  std::vector<TruncatedSeries> cols;
  for (const auto& s : z) {
    TruncatedSeries t;
    t.c.assign(s.c.begin(), s.c.begin() + sigma);
    cols.push_back(t);
  }
  for (const auto& s : z) {
    TruncatedSeries t;
    t.c.assign(s.c.begin(), s.c.begin() + sigma);
    cols.push_back(mahler_series(t, b));
  }
  return cols;
}

}  // namespace msolve
