#include "kdesc/theta.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace kdesc {

double theta(int k, double x, double y) {
  if (k < 2) throw std::invalid_argument("theta: k must be >= 2");
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)
    throw std::domain_error("theta: arguments must lie in [0, 1]");
  double v = 1.0 - std::pow(x, k) - std::pow(y, k);
  if (x > y) v += std::pow(x - y, k);
  return v;
}

Rational subset_range_probability(int k, int n, int l1, int l2) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (l1 < 0 || l1 > n || l2 < 0 || l2 > n)
    throw std::invalid_argument("levels must lie in [0, n]");
  const Bigint total = binom(n, k);
  Bigint num = total - binom(l2, k) - binom(n - l1, k);
  if (l2 > l1) num += binom(l2 - l1, k);
  return Rational(num, total);
}

McEstimate theta_mc_check(int k, int n, int l1, int l2, long long samples,
                          unsigned long long seed) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  std::mt19937_64 rng(seed);
  std::vector<int> pick(k);
  long long hits = 0;
  for (long long it = 0; it < samples; ++it) {
    // k distinct values from 1..n by rejection (k is tiny next to n)
    int got = 0;
    while (got < k) {
      const int v = static_cast<int>(rng() % static_cast<unsigned>(n)) + 1;
      bool dup = false;
      for (int j = 0; j < got; ++j) dup = dup || pick[j] == v;
      if (!dup) pick[got++] = v;
    }
    int mx = pick[0], mn = pick[0];
    for (int j = 1; j < k; ++j) {
      mx = std::max(mx, pick[j]);
      mn = std::min(mn, pick[j]);
    }
    if (mx > l2 && mn <= l1) ++hits;
  }
  McEstimate out;
  out.samples = samples;
  out.seed = seed;
  out.value = static_cast<double>(hits) / samples;
  out.stderr_value =
      std::sqrt(std::max(out.value * (1.0 - out.value), 1e-12) / samples);
  return out;
}

}
