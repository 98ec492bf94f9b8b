#pragma once

#include "kdesc/bigint.hpp"

namespace kdesc {

/* Gap weight coupling two consecutive runs in the multi-run integrand:
 * 1 - x^k - y^k + 1_{x>y}(x-y)^k. Not clamped: the formula as defined dips
 * below 0 when x and y are both close to 1. */
double theta(int k, double x, double y);

/* Probability that a uniform k-subset of {1..n} has maximum > l2 and
 * minimum <= l1, as an exact rational:
 * 1 - C(l2,k)/C(n,k) - C(n-l1,k)/C(n,k) + 1_{l2>l1} C(l2-l1,k)/C(n,k). */
Rational subset_range_probability(int k, int n, int l1, int l2);

struct McEstimate {
  double value = 0.0;
  double stderr_value = 0.0;
  long long samples = 0;
  unsigned long long seed = 0;
};

/* Monte Carlo estimate of the same subset-range probability; agrees with
 * subset_range_probability within sampling error and with
 * theta(k, l2/n, l1/n) up to the O(n^{-1/2}) continuum gap. */
McEstimate theta_mc_check(int k, int n, int l1, int l2, long long samples,
                          unsigned long long seed);

}
