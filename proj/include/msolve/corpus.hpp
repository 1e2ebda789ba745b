#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msolve/mahler.hpp"

namespace msolve::corpus {

MahlerOperator baum_sweet();
MahlerOperator rudin_shapiro();
MahlerOperator stern_brocot_b2();
MahlerOperator stern_brocot_b4();
MahlerOperator no_2s_in_3_exp();
MahlerOperator dilcher_stolarsky();
MahlerOperator thue_morse();
// Order 4, degree 258, regenerated from the 4x4 radix-3 system.
MahlerOperator adamczewski_faverjon();
MahlerOperator no_solution_b4();   // x^10 - M + M^4
MahlerOperator cube_root();        // M^2 - x
MahlerOperator parity_lclm();      // lclm of the annihilators of 1/(1-2x), 1/(1-3x)
MahlerOperator truncated_lclm();   // its coefficient truncation

struct Entry {
  std::string name;
  MahlerOperator op;
};

// lclm of first-order operators M - u_i for random rational u_i; the u_i are returned alongside.
struct Planted {
  MahlerOperator op;
  std::vector<RatFun> planted;
};
Planted planted_lclm(std::uint32_t seed);

// lclm of the binomial annihilators M^k - x^{(b^k - 1)/i} of x^{1/i}, i = 1..q. Every i must be
// coprime to b; otherwise the annihilator has a zero trailing coefficient.
MahlerOperator lclm_pow(int b, int q);

// lclm(C, C' + x^{deg C'} (M^2 + M + 1)) with C' = lclm(A, B) and A, B, C first order with dense
// integer coefficients of degree delta in [-1000, 1000]. The planted solution is the one of C.
Planted rmo(int b, int delta, std::uint32_t seed);

// Entries solved by every method in the default test run.
std::vector<Entry> small_entries();
// The order-2 entries used by the transcendence criterion.
std::vector<Entry> order_two_entries();

}  // namespace msolve::corpus
