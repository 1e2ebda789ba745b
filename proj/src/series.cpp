#include "msolve/series.hpp"

#include <stdexcept>

namespace msolve {

namespace {

// nu = max_k (v0 - v_k) / (b^k - 1) over nonzero coefficients, k >= 1.
Rational compute_nu(const MahlerOperator& L) {
  const int v0 = L.coeff(0).val();
  Rational nu;
  bool first = true;
  long bk = 1;
  for (int k = 1; k <= L.order(); ++k) {
    bk *= L.radix();
    if (L.coeff(k).is_zero()) continue;
    Rational t(v0 - L.coeff(k).val(), bk - 1);
    t.canonicalize();
    if (first || t > nu) nu = t;
    first = false;
  }
  return nu;
}

// Continue y beyond its current length up to sigma using the equation for x^{m+v0}.
void unroll(const MahlerOperator& L, std::vector<Rational>& y, int sigma) {
  const Poly& l0 = L.coeff(0);
  const int v0 = l0.val();
  const Rational inv = 1 / l0.coeff(v0);
  const int b = L.radix();
  int m = static_cast<int>(y.size());
  y.resize(std::max<int>(sigma, m), Rational(0));
  Rational acc, t;
  for (; m < sigma; ++m) {
    const long n = static_cast<long>(m) + v0;
    acc = 0;
    for (int j = v0 + 1; j <= l0.deg() && j <= n; ++j) {
      const Rational& c = l0.coeffs()[j];
      if (c == 0) continue;
      const Rational& yy = y[n - j];
      if (yy == 0) continue;
      t = c * yy;
      acc += t;
    }
    long bk = 1;
    for (int k = 1; k <= L.order(); ++k) {
      bk *= b;
      const Poly& lk = L.coeff(k);
      if (lk.is_zero()) continue;
      // j = n - bk*i for i >= 0 with 0 <= j <= deg lk
      long imax = n / bk;
      for (long i = imax; i >= 0; --i) {
        long j = n - bk * i;
        if (j > lk.deg()) break;
        const Rational& c = lk.coeffs()[j];
        if (c == 0 || y[i] == 0) continue;
        t = c * y[i];
        acc += t;
      }
    }
    y[m] = -acc * inv;
  }
}

}  // namespace

int free_prefix(const MahlerOperator& L) {
  if (L.order() == 0) return 0;
  Rational nu = compute_nu(L);
  if (nu < 0) return 0;
  Integer f = nu.get_num() / nu.get_den();
  return static_cast<int>(f.get_si()) + 1;
}

SeriesBasis series_basis(const MahlerOperator& L, int sigma) {
  SeriesBasis out;
  const int T = free_prefix(L);
  if (sigma <= 0) sigma = std::max(T, 1);
  out.sigma = sigma;
  if (T == 0) return out;
  const int v0 = L.coeff(0).val();
  const int b = L.radix();
  // Equations for x^n, n = 0..T-1+v0, in the unknowns y_0..y_{T-1}.
  const int neq = T + v0;
  RatMatrix A(neq, std::vector<Rational>(T, Rational(0)));
  long bk = 1;
  for (int k = 0; k <= L.order(); ++k) {
    const Poly& lk = L.coeff(k);
    for (int i = 0; i < T; ++i)
      for (int j = 0; j <= lk.deg(); ++j) {
        long n = bk * i + j;
        if (n >= neq) break;
        A[n][i] += lk.coeffs()[j];
      }
    bk *= b;
  }
  RatMatrix ker = nullspace(A);
  for (auto& v : ker) {
    TruncatedSeries s;
    s.c = v;
    unroll(L, s.c, sigma);
    s.c.resize(sigma);
    out.elements.push_back(std::move(s));
  }
  return out;
}

SeriesBasis extend_basis(const MahlerOperator& L, const SeriesBasis& basis, int sigma) {
  if (sigma < basis.sigma) throw std::invalid_argument("extend_basis: order must not decrease");
  SeriesBasis out = basis;
  out.sigma = sigma;
  const int T = free_prefix(L);
  for (auto& s : out.elements) {
    if (s.order() < T) {
      // Prefix too short to continue safely; recompute from scratch.
      return series_basis(L, sigma);
    }
    unroll(L, s.c, sigma);
  }
  return out;
}

}  // namespace msolve
