#pragma once

#include <vector>

#include "msolve/poly.hpp"
#include "msolve/ratfun.hpp"

namespace msolve {

using PolyMatrix = std::vector<std::vector<Poly>>;
using RatMatrix = std::vector<std::vector<Rational>>;

// Determinant by fraction-free (Bareiss) elimination.
Poly det(PolyMatrix A);
Rational det(RatMatrix A);

// Rank over Q(x).
int rank_ratfun(const PolyMatrix& A);
int rank(RatMatrix A);

// Signed maximal minors K = (D1, -D2, ..., (-1)^n D_{n+1}) of an (n+1) x n matrix,
// D_i being the minor with row i deleted. K * Omega = 0.
std::vector<Poly> kernel_cramer(const PolyMatrix& omega);

// Basis of the left kernel {v : v * A = 0} over Q(x), each vector cleared to Q[x] and made primitive.
std::vector<std::vector<Poly>> left_kernel(const PolyMatrix& A);

// Row-reduced echelon form over Q; returns pivot columns.
std::vector<int> rref(RatMatrix& A);
// Basis of {v : A v = 0} over Q in reduced echelon form (rows).
RatMatrix nullspace(const RatMatrix& A);

PolyMatrix transpose(const PolyMatrix& A);
PolyMatrix mul(const PolyMatrix& A, const PolyMatrix& B);

}  // namespace msolve
