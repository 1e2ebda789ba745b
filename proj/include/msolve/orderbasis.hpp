#pragma once

#include <vector>

#include "msolve/mahler.hpp"
#include "msolve/polymat.hpp"

namespace msolve {

// Minimal basis of {w in Q[x]^m : w . f = 0 mod x^sigma}.
struct ApproxSyzygyBasis {
  PolyMatrix rows;
  std::vector<int> row_degrees;
  int sigma = 0;
  std::vector<TruncatedSeries> f;
};

ApproxSyzygyBasis minimal_basis(const std::vector<TruncatedSeries>& f, int sigma);

// Rows of degree at most b_inf; their number is the rank of the module they span.
struct FilteredMatrix {
  PolyMatrix W;
  int rho = 0;
  Rational b_inf;
  int sigma = 0;
};

FilteredMatrix filtered_matrix(const ApproxSyzygyBasis& basis, const Rational& b_inf);

// Columns (z_1..z_N, M z_1..M z_N) truncated to sigma.
std::vector<TruncatedSeries> riccati_columns(const std::vector<TruncatedSeries>& z, int b, int sigma);

}  // namespace msolve
