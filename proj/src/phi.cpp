#include "kdesc/phi.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "kdesc/quadrature.hpp"

namespace kdesc {

namespace {

/* d-th derivative of g at z, summing the differentiated term pairs
 * -z^{jk-1-d}/(jk-1-d)! + z^{jk-d}/(jk-d)! for j >= 1 (entries with a
 * negative exponent drop out; the constant survives only at d = 0). */
double g_series(int k, double z, int d) {
  double sum = d == 0 ? 1.0 : 0.0;
  for (int j = 1;; ++j) {
    const int ea = j * k - 1 - d;  // exponent of the negative term
    const int eb = j * k - d;      // exponent of the positive term
    if (eb < 0) continue;
    double a = 0.0, b = 0.0;
    if (ea >= 0) {
      a = 1.0;
      for (int m = 1; m <= ea; ++m) a *= z / m;
    }
    b = a;
    if (ea >= 0)
      b *= z / eb;
    else {
      b = 1.0;
      for (int m = 1; m <= eb; ++m) b *= z / m;
    }
    sum += b - a;
    if (ea >= 0 && a < 1e-18 * (std::fabs(sum) + 1.0) && ea > z) break;
  }
  return sum;
}

}  // namespace

PhiEvaluator::PhiEvaluator(int k, PhiMode mode)
    : PhiEvaluator(growth_rate(k), mode) {}

PhiEvaluator::PhiEvaluator(GrowthProfile profile, PhiMode mode)
    : profile_(std::move(profile)), mode_(mode) {
  if (mode_ == PhiMode::closed_form_k3 && profile_.k != 3)
    throw std::invalid_argument("closed form exists only for k = 3");
}

double PhiEvaluator::operator()(double x) const {
  if (x < 0.0 || x > 1.0)
    throw std::domain_error("density argument must lie in [0, 1]");
  const int k = profile_.k;
  const double x1 = profile_.x1;
  switch (mode_) {
    case PhiMode::series:
      return x1 * g_series(k, x * x1, 0);
    case PhiMode::roots_of_unity: {
      const std::complex<double> z(x * x1, 0.0);
      std::complex<double> acc(0.0, 0.0);
      for (int j = 1; j < k; ++j) {
        const double ang = 2.0 * M_PI * j / k;
        const std::complex<double> w(std::cos(ang), std::sin(ang));
        acc += (1.0 - w) * std::exp(w * z);
      }
      return x1 / k * acc.real();
    }
    case PhiMode::closed_form_k3: {
      const double s3 = 3.0 * std::sqrt(3.0);
      return (4.0 * M_PI / 9.0) * std::exp(-M_PI * x / s3) *
             std::sin((x + 1.0) * M_PI / 3.0);
    }
  }
  return 0.0;
}

double PhiEvaluator::derivative(double x, int order) const {
  if (x < 0.0 || x > 1.0)
    throw std::domain_error("density argument must lie in [0, 1]");
  if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
  const double x1 = profile_.x1;
  double scale = x1;
  for (int i = 0; i < order; ++i) scale *= x1;
  return scale * g_series(profile_.k, x * x1, order);
}

PhiDiagnostics phi_diagnostics(int k, int grid_points) {
  PhiEvaluator phi(k);
  const double x1 = phi.profile().x1;
  PhiDiagnostics out;
  out.k = k;

  double pow_plus = 1.0;
  for (int i = 0; i < k; ++i) pow_plus *= x1;
  const double pow_minus = 1.0 / pow_plus;

  for (int i = 0; i <= grid_points; ++i) {
    const double x = static_cast<double>(i) / grid_points;
    const double v = phi(x);
    const double dk = phi.derivative(x, k);
    out.ode_residual = std::max(out.ode_residual, std::fabs(dk - pow_plus * v));
    out.ode_residual_reciprocal =
        std::max(out.ode_residual_reciprocal, std::fabs(dk - pow_minus * v));
    out.sup_deviation = std::max(out.sup_deviation, std::fabs(v - 1.0));
  }
  for (int j = 1; j <= k - 2; ++j)
    out.derivs_at_zero.push_back(phi.derivative(0.0, j));
  out.top_deriv_at_one = phi.derivative(1.0, k - 1);
  out.integral = integrate([&](double x) { return phi(x); }, 0.0, 1.0, 1e-12).value;
  return out;
}

std::string PhiDiagnostics::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"k\":" << k << ",\"ode_residual\":" << ode_residual
     << ",\"ode_residual_reciprocal\":" << ode_residual_reciprocal
     << ",\"derivs_at_zero\":[";
  for (size_t i = 0; i < derivs_at_zero.size(); ++i) {
    if (i) os << ',';
    os << derivs_at_zero[i];
  }
  os << "],\"top_deriv_at_one\":" << top_deriv_at_one
     << ",\"integral\":" << integral << ",\"sup_deviation\":" << sup_deviation
     << "}";
  return os.str();
}

std::string phi_curve_csv(const PhiEvaluator& phi, int grid_points) {
  if (grid_points < 1) throw std::invalid_argument("grid must be positive");
  std::ostringstream os;
  os.precision(12);
  os << "x,phi\n";
  for (int i = 0; i <= grid_points; ++i) {
    const double x = static_cast<double>(i) / grid_points;
    os << x << ',' << phi(x) << '\n';
  }
  return os.str();
}

}
