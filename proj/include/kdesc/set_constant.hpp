#pragma once

#include <string>
#include <vector>

#include "kdesc/bigint.hpp"

namespace kdesc {

struct ConstantResult {
  double value = 0.0;
  double estimated_error = 0.0;
  std::string method;  // "adaptive_nested" or "monte_carlo"
  int k = 0;
  std::vector<int> set;       // populated for set constants
  int a = -1;                 // populated (>= 0) for multi-run constants
  long long samples = 0;      // monte_carlo only
  unsigned long long seed = 0;
  std::string to_json() const;
};

/* Limit constant of d_k(I,n)/f_k(n): with t = max(I)+k-1, the t-fold
 * insertion positions reduce to one outer integral of the first-entry
 * density against an exact-coefficient polynomial. Coefficients come from
 * the exact DP at size t; the polynomial is assembled in the nonnegative
 * tail basis sum_j W_j C(t,j) x^j (1-x)^{t-j} so no cancellation occurs.
 * Guard: t <= 20. */
ConstantResult set_constant(int k, const std::vector<int>& set);

/* Same constant from the per-permutation form: enumerate all witnesses of
 * the set at size t (t <= 10), group by last entry, and integrate the
 * monomial antiderivatives. Agrees with set_constant to ~1e-9; kept as an
 * independently derived route. */
ConstantResult set_constant_direct(int k, const std::vector<int>& set);

// constants for the singleton sets {1}..{max_i}
std::vector<ConstantResult> singleton_constant_table(int k, int max_i);

struct ConvergenceRow {
  int n = 0;
  double ratio_exact = 0.0;  // d_k(I,n)/f_k(n), exact rational to double
  double constant = 0.0;
  double rel_gap = 0.0;      // |ratio/constant - 1|
};

std::vector<ConvergenceRow> convergence_report(int k,
                                               const std::vector<int>& set,
                                               const std::vector<int>& n_list);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}
