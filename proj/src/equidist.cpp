#include "kdesc/equidist.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "kdesc/growth.hpp"
#include "kdesc/phi.hpp"
#include "kdesc/quadrature.hpp"
#include "kdesc/theta.hpp"

namespace kdesc {

std::string EquidistReport::to_json() const {
  nlohmann::json j;
  j["k"] = k;
  j["a"] = a;
  j["value"] = value;
  j["error"] = stderr_value;
  j["method"] = a == 0 ? "exact" : "monte_carlo";
  j["samples"] = samples;
  j["seed"] = seed;
  nlohmann::json d;
  d["event_value"] = event_value;
  d["event_stderr"] = event_stderr;
  d["prefactor_single"] = prefactor_single;
  d["prefactor_product"] = prefactor_product;
  if (has_quadrature) {
    d["quad_value"] = quad_value;
    d["quad_error"] = quad_error;
    d["quad_event_value"] = quad_event_value;
    d["quad_event_error"] = quad_event_error;
  }
  j["diagnostics"] = d;
  return j.dump();
}

namespace {

// piecewise linear table, accurate to ~1e-10 at this resolution
class PhiTable {
 public:
  PhiTable(const PhiEvaluator& phi, int intervals) : n_(intervals), v_(intervals + 1) {
    for (int i = 0; i <= intervals; ++i)
      v_[i] = phi(static_cast<double>(i) / intervals);
  }
  double operator()(double x) const {
    double s = x * n_;
    int i = static_cast<int>(s);
    if (i >= n_) return v_[n_];
    double f = s - i;
    return v_[i] + f * (v_[i + 1] - v_[i]);
  }

 private:
  int n_;
  std::vector<double> v_;
};

double event_kernel(int k, double y, double x) {
  double v = 1.0 - std::pow(y, k) - std::pow(1.0 - x, k);
  if (y > x) v += std::pow(y - x, k);
  return v;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}

EquidistReport equidist_constant(int k, int a, long long samples,
                                 unsigned long long seed) {
  if (k < 3)
    throw std::invalid_argument("equidist_constant: requires k >= 3");
  if (a < 0 || a > 6)
    throw std::invalid_argument("equidist_constant: a must be in [0, 6]");

  GrowthProfile gp = growth_rate(k);
  double kfact = to_double(factorial(k));
  EquidistReport rep;
  rep.k = k;
  rep.a = a;
  rep.seed = seed;
  rep.prefactor_single =
      std::pow(gp.c_k, a) * std::pow(gp.x1, a * k) / kfact;
  rep.prefactor_product =
      std::pow(gp.c_k, a) * std::pow(gp.x1, a * k) / std::pow(kfact, a);

  if (a == 0) {
    rep.value = rep.event_value = 1.0;
    return rep;
  }
  if (samples < 100000)
    throw std::invalid_argument(
        "equidist_constant: need at least 100000 samples, got " +
        std::to_string(samples));
  rep.samples = samples;

  PhiEvaluator phi(gp);
  PhiTable tab(phi, 1 << 16);

  int strata = a == 1 ? 16 : a == 2 ? 8 : a == 3 ? 4 : 2;
  long long cells = 1;
  for (int i = 0; i <= a; ++i) cells *= strata;
  long long base = samples / cells;
  long long rem = samples % cells;
  double vol = 1.0 / static_cast<double>(cells);

  std::vector<double> mean_g(cells), var_g(cells), mean_e(cells), var_e(cells);
  std::vector<long long> count(cells);

#pragma omp parallel for schedule(dynamic)
  for (long long c = 0; c < cells; ++c) {
    int digit[8];
    long long rest = c;
    for (int i = 0; i <= a; ++i) {
      digit[i] = static_cast<int>(rest % strata);
      rest /= strata;
    }
    long long n_c = base + (c < rem ? 1 : 0);
    std::mt19937_64 rng(seed + static_cast<unsigned long long>(c));
    double sg = 0, sgg = 0, se = 0, see = 0;
    double x[8], y[8];
    for (long long s = 0; s < n_c; ++s) {
      for (int i = 0; i <= a; ++i) {
        x[i] = uniform01(rng);
        y[i] = (digit[i] + uniform01(rng)) / strata;
      }
      double common = 1.0;
      for (int i = 0; i <= a; ++i) common *= tab(x[i]) * tab(1.0 - y[i]);
      double gap = 1.0, event = 1.0;
      for (int j = 0; j < a; ++j) {
        gap *= theta(k, y[j], x[j + 1]);
        event *= event_kernel(k, y[j], x[j + 1]);
      }
      double g = common * gap, e = common * event;
      sg += g;
      sgg += g * g;
      se += e;
      see += e * e;
    }
    count[c] = n_c;
    mean_g[c] = sg / n_c;
    var_g[c] = (sgg - sg * sg / n_c) / (n_c - 1);
    mean_e[c] = se / n_c;
    var_e[c] = (see - se * se / n_c) / (n_c - 1);
  }

  double vg = 0, wg = 0, ve = 0, we = 0;
  for (long long c = 0; c < cells; ++c) {
    vg += vol * mean_g[c];
    wg += vol * vol * std::max(var_g[c], 0.0) / count[c];
    ve += vol * mean_e[c];
    we += vol * vol * std::max(var_e[c], 0.0) / count[c];
  }
  rep.value = vg;
  rep.stderr_value = std::sqrt(wg);
  rep.event_value = ve;
  rep.event_stderr = std::sqrt(we);

  if (a == 1) {
    // adaptive pass over all four coordinates; the last one is independent
    // of the rest, so its integral is computed once and multiplies the nest
    QuadratureResult qy2 =
        integrate([&](double y2) { return phi(1.0 - y2); }, 0.0, 1.0, 1e-10);
    for (int flavor = 0; flavor < 2; ++flavor) {
      auto kernel = [&](double yy, double xx) {
        return flavor == 0 ? theta(k, yy, xx) : event_kernel(k, yy, xx);
      };
      QuadratureResult outer = integrate(
          [&](double x1) {
            QuadratureResult qy1 = integrate(
                [&](double y1) {
                  QuadratureResult qx2 = integrate(
                      [&](double x2) { return kernel(y1, x2) * phi(x2); }, 0.0,
                      1.0, 1e-9);
                  return phi(1.0 - y1) * qx2.value;
                },
                0.0, 1.0, 1e-8);
            return phi(x1) * qy1.value;
          },
          0.0, 1.0, 1e-7);
      double value = outer.value * qy2.value;
      double err = outer.error_estimate + 1e-7;
      if (flavor == 0) {
        rep.quad_value = value;
        rep.quad_error = err;
      } else {
        rep.quad_event_value = value;
        rep.quad_event_error = err;
      }
    }
    rep.has_quadrature = true;
  }
  return rep;
}

}
