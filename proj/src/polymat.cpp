#include "msolve/polymat.hpp"

#include <stdexcept>

namespace msolve {

Poly det(PolyMatrix A) {
  const int n = static_cast<int>(A.size());
  if (n == 0) return Poly(1);
  Poly prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A[k][k].is_zero()) {
      int sel = -1;
      for (int i = k + 1; i < n; ++i)
        if (!A[i][k].is_zero()) {
          sel = i;
          break;
        }
      if (sel < 0) return Poly();
      std::swap(A[k], A[sel]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) A[i][j] = exact_div(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev);
      A[i][k] = Poly();
    }
    prev = A[k][k];
  }
  return sign < 0 ? -A[n - 1][n - 1] : A[n - 1][n - 1];
}

Rational det(RatMatrix A) {
  const int n = static_cast<int>(A.size());
  Rational d = 1;
  for (int k = 0; k < n; ++k) {
    int sel = -1;
    for (int i = k; i < n; ++i)
      if (A[i][k] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) return 0;
    if (sel != k) {
      std::swap(A[k], A[sel]);
      d = -d;
    }
    d *= A[k][k];
    for (int i = k + 1; i < n; ++i) {
      if (A[i][k] == 0) continue;
      Rational f = A[i][k] / A[k][k];
      for (int j = k; j < n; ++j) A[i][j] -= f * A[k][j];
    }
  }
  return d;
}

int rank_ratfun(const PolyMatrix& Ain) {
  PolyMatrix A = Ain;
  const int m = static_cast<int>(A.size());
  if (m == 0) return 0;
  const int n = static_cast<int>(A[0].size());
  Poly prev(1);
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int sel = -1;
    int best = -1;
    for (int i = row; i < m; ++i)
      if (!A[i][col].is_zero() && (sel < 0 || A[i][col].deg() < best)) {
        sel = i;
        best = A[i][col].deg();
      }
    if (sel < 0) continue;
    std::swap(A[row], A[sel]);
    for (int i = row + 1; i < m; ++i) {
      for (int j = col + 1; j < n; ++j)
        A[i][j] = exact_div(A[i][j] * A[row][col] - A[i][col] * A[row][j], prev);
      A[i][col] = Poly();
    }
    prev = A[row][col];
    ++row;
  }
  return row;
}

std::vector<int> rref(RatMatrix& A) {
  std::vector<int> piv;
  const int m = static_cast<int>(A.size());
  if (m == 0) return piv;
  const int n = static_cast<int>(A[0].size());
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int sel = -1;
    for (int i = row; i < m; ++i)
      if (A[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(A[row], A[sel]);
    Rational inv = 1 / A[row][col];
    for (int j = col; j < n; ++j) A[row][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || A[i][col] == 0) continue;
      Rational f = A[i][col];
      for (int j = col; j < n; ++j)
        if (A[row][j] != 0) A[i][j] -= f * A[row][j];
    }
    piv.push_back(col);
    ++row;
  }
  A.resize(row);
  return piv;
}

int rank(RatMatrix A) { return static_cast<int>(rref(A).size()); }

RatMatrix nullspace(const RatMatrix& Ain) {
  RatMatrix A = Ain;
  if (A.empty()) return {};
  const int n = static_cast<int>(A[0].size());
  auto piv = rref(A);
  std::vector<int> where(n, -1);
  for (std::size_t r = 0; r < piv.size(); ++r) where[piv[r]] = static_cast<int>(r);
  RatMatrix out;
  for (int f = 0; f < n; ++f) {
    if (where[f] >= 0) continue;
    std::vector<Rational> v(n, Rational(0));
    v[f] = 1;
    for (int c = 0; c < n; ++c)
      if (where[c] >= 0) v[c] = -A[where[c]][f];
    out.push_back(v);
  }
  // Reduced echelon by lowest index.
  rref(out);
  return out;
}

std::vector<Poly> kernel_cramer(const PolyMatrix& omega) {
  const int rows = static_cast<int>(omega.size());
  if (rows == 0) throw std::invalid_argument("kernel_cramer: empty matrix");
  const int n = rows - 1;
  for (const auto& r : omega)
    if (static_cast<int>(r.size()) != n) throw std::invalid_argument("kernel_cramer: shape must be (n+1) x n");
  std::vector<Poly> K(rows);
  bool nonzero = false;
  for (int i = 0; i < rows; ++i) {
    PolyMatrix sub;
    sub.reserve(n);
    for (int k = 0; k < rows; ++k)
      if (k != i) sub.push_back(omega[k]);
    Poly d = det(std::move(sub));
    K[i] = (i % 2 == 0) ? d : -d;
    if (!d.is_zero()) nonzero = true;
  }
  if (!nonzero) throw std::domain_error("kernel_cramer: rank deficient");
  return K;
}

std::vector<std::vector<Poly>> left_kernel(const PolyMatrix& A) {
  // Solve v * A = 0, i.e. A^T v^T = 0, by Gauss-Jordan over Q(x).
  const int m = static_cast<int>(A.size());
  if (m == 0) return {};
  const int n = static_cast<int>(A[0].size());
  std::vector<std::vector<RatFun>> T(n, std::vector<RatFun>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) T[j][i] = RatFun(A[i][j]);
  std::vector<int> where(m, -1);
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int sel = -1;
    for (int i = row; i < n; ++i)
      if (!T[i][col].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(T[row], T[sel]);
    RatFun inv = T[row][col].inverse();
    for (int j = col; j < m; ++j)
      if (!T[row][j].is_zero()) T[row][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || T[i][col].is_zero()) continue;
      RatFun f = T[i][col];
      for (int j = col; j < m; ++j)
        if (!T[row][j].is_zero()) T[i][j] -= f * T[row][j];
    }
    where[col] = row;
    ++row;
  }
  std::vector<std::vector<Poly>> out;
  for (int f = 0; f < m; ++f) {
    if (where[f] >= 0) continue;
    std::vector<RatFun> v(m);
    v[f] = RatFun(Poly(1));
    for (int c = 0; c < m; ++c)
      if (where[c] >= 0) v[c] = -T[where[c]][f];
    Poly den(1);
    for (const auto& e : v) den = lcm(den, e.den());
    std::vector<Poly> pv(m);
    Poly g;
    for (int c = 0; c < m; ++c) {
      pv[c] = v[c].num() * exact_div(den, v[c].den());
      g = gcd(g, pv[c]);
    }
    for (auto& e : pv) e = exact_div(e, g);
    out.push_back(pv);
  }
  return out;
}

PolyMatrix transpose(const PolyMatrix& A) {
  if (A.empty()) return {};
  PolyMatrix T(A[0].size(), std::vector<Poly>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
  return T;
}

PolyMatrix mul(const PolyMatrix& A, const PolyMatrix& B) {
  PolyMatrix C(A.size(), std::vector<Poly>(B.empty() ? 0 : B[0].size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t k = 0; k < B.size(); ++k) {
      if (A[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < B[0].size(); ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

}  // namespace msolve
