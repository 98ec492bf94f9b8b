#pragma once

#include <vector>

#include "kdesc/bigint.hpp"

namespace kdesc {

// density of the s-th smallest of t independent uniforms on [0,1]:
// t!/((s-1)!(t-s)!) * y^{s-1} (1-y)^{t-s}
double order_stat_density(int t, int s, double y);

struct OrderStatSpec {
  int n = 0;  // ground-set size
  int t = 0;  // sample size, <= n
  int s = 0;  // rank within the sample, 1..t
};

/* Exact distribution of the s-th smallest element of a uniform t-subset of
 * {1..n}; everything is rational so the moment identities can be checked as
 * equalities, not approximations. */
struct DiscreteOrderStat {
  OrderStatSpec spec;
  std::vector<Rational> pmf;  // index l-1, l = 1..n
  Rational mean;              // by direct summation
  Rational variance;
};

DiscreteOrderStat discrete_order_stat(const OrderStatSpec& spec);

// closed forms the summed moments must reproduce exactly
Rational order_stat_mean_formula(const OrderStatSpec& spec);      // s(n+1)/(t+1)
Rational order_stat_variance_formula(const OrderStatSpec& spec);  // s(t-s+1)(n+1)(n-t)/((t+1)^2(t+2))

}
