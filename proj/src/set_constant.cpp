#include "kdesc/set_constant.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "kdesc/descent_dp.hpp"
#include "kdesc/growth.hpp"
#include "kdesc/oracle.hpp"
#include "kdesc/phi.hpp"
#include "kdesc/quadrature.hpp"
#include "kdesc/triangle.hpp"

namespace kdesc {

std::string ConstantResult::to_json() const {
  nlohmann::json j;
  j["k"] = k;
  if (a >= 0)
    j["a"] = a;
  else
    j["I"] = set;
  j["value"] = value;
  j["error"] = estimated_error;
  j["method"] = method;
  if (method == "monte_carlo") {
    j["samples"] = samples;
    j["seed"] = seed;
  } else {
    j["samples"] = nullptr;
    j["seed"] = nullptr;
  }
  return j.dump();
}

namespace {

int checked_window(int k, const std::vector<int>& set, int limit,
                   const char* who) {
  DescentSpec spec(k, set);
  if (set.empty())
    throw std::invalid_argument(std::string(who) + ": set must be nonempty");
  int t = spec.t();
  if (t > limit)
    throw std::invalid_argument(std::string(who) + ": max(set)+k-1 = " +
                                std::to_string(t) +
                                " exceeds the supported limit of " +
                                std::to_string(limit));
  return t;
}

ConstantResult finish(int k, const std::vector<int>& set, int t,
                      const GrowthProfile& gp, const QuadratureResult& qr,
                      const char* method) {
  ConstantResult out;
  out.k = k;
  out.set = set;
  out.method = method;
  double scale = std::pow(gp.x1, t);
  out.value = scale * qr.value;
  out.estimated_error = scale * qr.error_estimate + 1e-12;
  return out;
}

}

ConstantResult set_constant(int k, const std::vector<int>& set) {
  int t = checked_window(k, set, 20, "set_constant");
  std::vector<Bigint> by_last = count_by_last(DescentSpec(k, set), t);

  // tail weights: cumulative counts make every coefficient nonnegative
  Bigint tf = factorial(t);
  std::array<double, 21> w{};
  Bigint cum = 0;
  for (int j = 1; j <= t; ++j) {
    cum += by_last[j - 1];
    w[j] = to_double(Rational(cum * binom(t, j), tf));
  }

  GrowthProfile gp = growth_rate(k);
  PhiEvaluator phi(gp);
  std::array<double, 21> q{};
  auto integrand = [&](double x) {
    q[0] = 1.0;
    for (int i = 1; i <= t; ++i) q[i] = q[i - 1] * (1.0 - x);
    double inner = 0.0, xp = 1.0;
    for (int j = 1; j <= t; ++j) {
      xp *= x;
      inner += w[j] * xp * q[t - j];
    }
    return phi(x) * inner;
  };
  QuadratureResult qr = integrate(integrand, 0.0, 1.0, 1e-11);
  return finish(k, set, t, gp, qr, "quadrature");
}

ConstantResult set_constant_direct(int k, const std::vector<int>& set) {
  int t = checked_window(k, set, 10, "set_constant_direct");

  // witness counts by last entry, from full enumeration at size t
  PatternQuery query{decreasing_pattern(k), t,
                     Grouping::by_set_and_first_and_last};
  OracleReport rep = enumerate(query);
  std::vector<Bigint> by_last(t, Bigint(0));
  for (const auto& [key, cnt] : rep.counts)
    if (key.set == set) by_last[key.m2 - 1] += cnt;

  // expand the position densities into plain monomials, exactly
  std::vector<Rational> poly(t + 1, Rational(0));
  for (int s = 1; s <= t; ++s) {
    if (by_last[s - 1] == 0) continue;
    Bigint lead = Bigint(s) * binom(t, s) * by_last[s - 1];
    for (int i = 0; i <= t - s; ++i) {
      Rational term(lead * binom(t - s, i), Bigint(s + i));
      if (i % 2 == 1) term = -term;
      poly[s + i] += term;
    }
  }
  Bigint tf = factorial(t);
  std::array<double, 21> pc{};
  for (int d = 1; d <= t; ++d) pc[d] = to_double(poly[d] / Rational(tf));

  GrowthProfile gp = growth_rate(k);
  PhiEvaluator phi(gp);
  auto integrand = [&](double x) {
    double acc = pc[t];
    for (int d = t - 1; d >= 0; --d) acc = acc * x + pc[d];
    return phi(x) * acc;
  };
  QuadratureResult qr = integrate(integrand, 0.0, 1.0, 1e-11);
  return finish(k, set, t, gp, qr, "enumeration");
}

std::vector<ConstantResult> singleton_constant_table(int k, int max_i) {
  if (max_i < 1)
    throw std::invalid_argument("singleton_constant_table: max_i must be >= 1");
  std::vector<ConstantResult> out;
  out.reserve(max_i);
  for (int i = 1; i <= max_i; ++i) out.push_back(set_constant(k, {i}));
  return out;
}

std::vector<ConvergenceRow> convergence_report(int k,
                                               const std::vector<int>& set,
                                               const std::vector<int>& n_list) {
  if (n_list.empty())
    throw std::invalid_argument("convergence_report: empty n list");
  for (int n : n_list)
    if (n < 1 || n > 600)
      throw std::invalid_argument(
          "convergence_report: n must be in [1, 600], got " +
          std::to_string(n));
  ConstantResult c = set_constant(k, set);
  int max_n = *std::max_element(n_list.begin(), n_list.end());
  Triangle tri(k, max_n);
  DescentSpec spec(k, set);
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    ConvergenceRow r;
    r.n = n;
    r.ratio_exact = to_double(Rational(count_with_set(spec, n), tri.row_sum(n)));
    r.constant = c.value;
    r.rel_gap = std::fabs(r.ratio_exact / c.value - 1.0);
    rows.push_back(r);
  }
  return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os.precision(12);
  os << "n,ratio_exact,constant,rel_gap\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.ratio_exact << ',' << r.constant << ',' << r.rel_gap
       << '\n';
  return os.str();
}

}
