#include "kdesc/orderstat.hpp"

#include <cmath>
#include <stdexcept>

namespace kdesc {

namespace {
void check_spec(const OrderStatSpec& spec) {
  if (spec.s < 1 || spec.s > spec.t || spec.t > spec.n)
    throw std::invalid_argument("order statistic needs 1 <= s <= t <= n");
}
}

double order_stat_density(int t, int s, double y) {
  if (s < 1 || s > t) throw std::invalid_argument("need 1 <= s <= t");
  if (y < 0.0 || y > 1.0) throw std::domain_error("y must lie in [0, 1]");
  const double c = s * to_double(binom(t, s));
  return c * std::pow(y, s - 1) * std::pow(1.0 - y, t - s);
}

DiscreteOrderStat discrete_order_stat(const OrderStatSpec& spec) {
  check_spec(spec);
  const int n = spec.n, t = spec.t, s = spec.s;
  DiscreteOrderStat out;
  out.spec = spec;
  out.pmf.assign(n, Rational(0));
  const Bigint denom = binom(n, t);
  Rational mean = 0, second = 0;
  for (int l = s; l <= n - t + s; ++l) {
    Rational p(binom(l - 1, s - 1) * binom(n - l, t - s), denom);
    mean += p * l;
    second += p * l * l;
    out.pmf[l - 1] = std::move(p);
  }
  out.mean = mean;
  out.variance = second - mean * mean;
  return out;
}

Rational order_stat_mean_formula(const OrderStatSpec& spec) {
  check_spec(spec);
  return Rational(Bigint(spec.s) * (spec.n + 1), Bigint(spec.t + 1));
}

Rational order_stat_variance_formula(const OrderStatSpec& spec) {
  check_spec(spec);
  const Bigint num = Bigint(spec.s) * (spec.t - spec.s + 1) * (spec.n + 1) *
                     (spec.n - spec.t);
  const Bigint den = Bigint(spec.t + 1) * (spec.t + 1) * (spec.t + 2);
  return Rational(num, den);
}

}
