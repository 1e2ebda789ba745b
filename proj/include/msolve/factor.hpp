#pragma once

#include <utility>
#include <vector>

#include "msolve/poly.hpp"

namespace msolve {

struct FactoredPoly {
  Rational content = 1;
  // Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
  std::vector<std::pair<Poly, int>> factors;

  Poly expand() const;
  int multiplicity(const Poly& monic_irreducible) const;
};

// Yun's algorithm: f = c * prod s_i^i with s_i monic squarefree, pairwise coprime.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);
Poly squarefree_part(const Poly& f);

// Complete factorization over Q into monic irreducibles (Zassenhaus).
FactoredPoly factor(const Poly& f);

std::vector<Rational> rational_roots(const Poly& f);

// Res_y(y^b - x, f(y)), normalized monic.
Poly graeffe(const Poly& f, int b);
// Same quantity through Newton power sums; independent route used as a cross-check.
Poly graeffe_newton(const Poly& f, int b);

// Canonical total order on polynomials (degree, then coefficients from the top).
bool poly_less(const Poly& a, const Poly& b);

}  // namespace msolve
