#pragma once

#include <vector>

#include "msolve/mahler.hpp"

namespace msolve {

struct SeriesBasis {
  std::vector<TruncatedSeries> elements;  // reduced echelon by ascending valuation
  int sigma = 0;
  int dim() const { return static_cast<int>(elements.size()); }
};

// Number of leading coefficients that are free in the coefficient recurrence
// (floor(nu) + 1, or 0 when nu < 0).
int free_prefix(const MahlerOperator& L);

// Basis of the power-series solutions modulo x^sigma; sigma <= 0 selects the
// smallest order that determines the basis.
SeriesBasis series_basis(const MahlerOperator& L, int sigma = 0);
SeriesBasis extend_basis(const MahlerOperator& L, const SeriesBasis& basis, int sigma);

}  // namespace msolve
