#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kdesc/orderstat.hpp"
#include "kdesc/quadrature.hpp"
#include "kdesc/theta.hpp"

using kdesc::Bigint;
using kdesc::OrderStatSpec;
using kdesc::Rational;

TEST_CASE("continuous density spot values and normalization") {
  CHECK(kdesc::order_stat_density(1, 1, 0.3) == 1.0);
  CHECK(std::fabs(kdesc::order_stat_density(2, 1, 0.25) - 1.5) < 1e-15);
  CHECK(std::fabs(kdesc::order_stat_density(3, 2, 0.5) - 1.5) < 1e-15);
  for (int t = 1; t <= 8; ++t)
    for (int s = 1; s <= t; ++s) {
      auto q = kdesc::integrate(
          [&](double y) { return kdesc::order_stat_density(t, s, y); }, 0, 1,
          1e-12);
      CHECK(std::fabs(q.value - 1.0) < 1e-12);
    }
  CHECK_THROWS_AS(kdesc::order_stat_density(2, 3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(kdesc::order_stat_density(2, 1, 1.5), std::domain_error);
}

TEST_CASE("exact pmf cases") {
  auto u = kdesc::discrete_order_stat({5, 1, 1});
  for (int l = 1; l <= 5; ++l) CHECK(u.pmf[l - 1] == Rational(1, 5));
  CHECK(u.mean == 3);
  CHECK(u.variance == 2);

  auto d = kdesc::discrete_order_stat({3, 2, 1});
  CHECK(d.pmf[0] == Rational(2, 3));
  CHECK(d.pmf[1] == Rational(1, 3));
  CHECK(d.pmf[2] == 0);
  CHECK(d.mean == Rational(4, 3));

  auto m = kdesc::discrete_order_stat({10, 4, 2});
  CHECK(m.mean == Rational(22, 5));
}

TEST_CASE("moment identities hold exactly up to n = 30") {
  for (int n = 1; n <= 30; ++n)
    for (int t = 1; t <= n; ++t)
      for (int s = 1; s <= t; ++s) {
        OrderStatSpec spec{n, t, s};
        auto d = kdesc::discrete_order_stat(spec);
        Rational total = 0;
        for (const auto& p : d.pmf) total += p;
        CHECK(total == 1);
        CHECK(d.mean == kdesc::order_stat_mean_formula(spec));
        CHECK(d.variance == kdesc::order_stat_variance_formula(spec));
        // concentration bound
        CHECK(d.variance <= Rational(Bigint(n) * n, Bigint(t)));
      }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(kdesc::discrete_order_stat({5, 6, 1}), std::invalid_argument);
  CHECK_THROWS_AS(kdesc::discrete_order_stat({5, 3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(kdesc::discrete_order_stat({5, 3, 4}), std::invalid_argument);
}

TEST_CASE("gap weight spot values") {
  CHECK(kdesc::theta(3, 0.0, 0.0) == 1.0);
  CHECK(kdesc::theta(5, 0.0, 0.0) == 1.0);
  CHECK(kdesc::theta(3, 0.0, 1.0) == 0.0);
  CHECK(std::fabs(kdesc::theta(3, 0.5, 0.5) - 0.75) < 1e-15);
  CHECK(std::fabs(kdesc::theta(3, 0.8, 0.3) -
                  (1.0 - 0.512 - 0.027 + 0.125)) < 1e-15);
  CHECK_THROWS_AS(kdesc::theta(3, -0.1, 0.5), std::domain_error);
  CHECK_THROWS_AS(kdesc::theta(3, 0.5, 1.1), std::domain_error);
}

TEST_CASE("exact subset-range probability") {
  using kdesc::subset_range_probability;
  CHECK(subset_range_probability(3, 50, 50, 0) == 1);
  CHECK(subset_range_probability(3, 50, 0, 50) == 0);
  // all-vacuous lower level: P(max > 0, min <= n) = 1
  CHECK(subset_range_probability(2, 9, 9, 0) == 1);
  const double p = kdesc::to_double(subset_range_probability(3, 1000, 500, 500));
  CHECK(std::fabs(p - 0.75) < 1e-2);
  CHECK(std::fabs(p - kdesc::theta(3, 0.5, 0.5)) < 1e-3);
}

TEST_CASE("sampled estimate brackets the exact value") {
  const double exact =
      kdesc::to_double(kdesc::subset_range_probability(3, 100, 30, 60));
  auto mc = kdesc::theta_mc_check(3, 100, 30, 60, 200000, 42);
  CHECK(std::fabs(mc.value - exact) < 4.0 * mc.stderr_value + 1e-6);
  auto again = kdesc::theta_mc_check(3, 100, 30, 60, 200000, 42);
  CHECK(mc.value == again.value);  // bit-for-bit for a fixed seed
  auto sure = kdesc::theta_mc_check(3, 50, 50, 0, 10000, 7);
  CHECK(sure.value == 1.0);
  auto never = kdesc::theta_mc_check(3, 50, 0, 50, 10000, 7);
  CHECK(never.value == 0.0);
}

TEST_CASE("continuum formula tracks the finite one away from the corners") {
  // second argument enters through n - l1, so the continuum form matches
  // the finite probability at the symmetric level l1 = n/2
  for (int n : {200, 400, 800}) {
    const double exact = kdesc::to_double(
        kdesc::subset_range_probability(3, n, n / 2, n / 4));
    const double cont = kdesc::theta(3, 0.25, 0.5);
    CHECK(std::fabs(exact - cont) < 4.0 / n);
  }
}
