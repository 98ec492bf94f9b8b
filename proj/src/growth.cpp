#include "kdesc/growth.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kdesc {

namespace {

void check_k(int k) {
  if (k < 3)
    throw std::invalid_argument(
        "growth analysis needs k >= 3 (at k = 2 the denominator e^{-x} has "
        "no zero)");
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double denominator(int k, double x) {
  check_k(k);
  if (x < 0) throw std::invalid_argument("denominator: x must be >= 0");
  // power = x^{kl}/(kl)!, advanced k factors at a time
  double power = 1.0;
  double sum = 0.0;
  for (int l = 0;; ++l) {
    const int kl = k * l;
    sum += power * (1.0 - x / (kl + 1));
    if (power < 1e-18 * (std::fabs(sum) + 1.0) && kl > x) break;
    for (int m = kl + 1; m <= kl + k; ++m) power *= x / m;
  }
  return sum;
}

double denominator_derivative(int k, double x) {
  check_k(k);
  if (x < 0) throw std::invalid_argument("denominator: x must be >= 0");
  // sum over l >= 1 of x^{kl-1}/(kl-1)! - x^{kl}/(kl)!, minus the constant 1
  double power = 1.0;  // x^{kl-1}/(kl-1)! at l = 1 after the first advance
  for (int m = 1; m <= k - 1; ++m) power *= x / m;
  double sum = -1.0;
  for (int l = 1;; ++l) {
    const int kl = k * l;
    sum += power * (1.0 - x / kl);
    if (power < 1e-18 * (std::fabs(sum) + 1.0) && kl > x) break;
    for (int m = kl; m <= kl + k - 1; ++m) power *= x / m;
  }
  return sum;
}

GrowthProfile growth_rate(int k, double tol) {
  check_k(k);
  if (tol < 1e-14) throw std::invalid_argument("tolerance below 1e-14");

  GrowthProfile out;
  out.k = k;
  double lo, hi;
  if (k == 3) {
    lo = 1.0;
    hi = 1.5;
    out.gamma_hint = 0.5;
  } else {
    const double kf = factorial_d(k);
    const double g = (kf + 1.0) / (factorial_d(k + 1) + 1.0);
    const double h = 2.0 * (k + 1) / (kf - 2.0 * (k + 1));
    lo = 1.0 + (1.0 - g) / kf;
    hi = 1.0 + (1.0 + h) / kf;
    out.warlimont_lower = lo;
    out.warlimont_upper = hi;
  }

  double flo = denominator(k, lo), fhi = denominator(k, hi);
  if (!(flo > 0.0) || !(fhi < 0.0)) {
    std::ostringstream os;
    os << "no sign change on [" << lo << ", " << hi << "] for k = " << k;
    throw std::runtime_error(os.str());
  }
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (denominator(k, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  out.x1 = 0.5 * (lo + hi);
  out.r_k = 1.0 / out.x1;
  out.c_k = -1.0 / (out.x1 * denominator_derivative(k, out.x1));
  return out;
}

std::string GrowthProfile::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"k\":" << k << ",\"x1\":" << x1 << ",\"r_k\":" << r_k
     << ",\"c_k\":" << c_k;
  os << ",\"warlimont_lower\":";
  if (warlimont_lower) os << *warlimont_lower; else os << "null";
  os << ",\"warlimont_upper\":";
  if (warlimont_upper) os << *warlimont_upper; else os << "null";
  os << "}";
  return os.str();
}

double k3_root_closed_form() {
  return 2.0 * M_PI / (3.0 * std::sqrt(3.0));
}

double k3_leading_coeff_closed_form() {
  const double s = 3.0 * std::sqrt(3.0);
  return (s / (2.0 * M_PI)) * std::exp(M_PI / s);
}

}
