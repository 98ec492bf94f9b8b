#pragma once

#include <string>
#include <vector>

#include "kdesc/growth.hpp"

namespace kdesc {

enum class PhiMode { series, roots_of_unity, closed_form_k3 };

/* Limit density of the (scaled) first entry of a run-avoiding permutation.
 * phi(x) = x1 * g(x * x1) where g(z) = 1 - z^{k-1}/(k-1)! + z^k/k!
 * - z^{2k-1}/(2k-1)! + z^{2k}/(2k)! - ... ; the finite roots-of-unity sum
 * and (at k = 3) the damped-sine closed form evaluate the same function and
 * are kept as independent cross-checks. Derivatives always come from the
 * term-wise differentiated series. */
class PhiEvaluator {
public:
  explicit PhiEvaluator(int k, PhiMode mode = PhiMode::series);
  PhiEvaluator(GrowthProfile profile, PhiMode mode = PhiMode::series);

  // density value at x in [0, 1]
  double operator()(double x) const;
  // d^order/dx^order of the density, order >= 0, series-based
  double derivative(double x, int order) const;

  int k() const { return profile_.k; }
  const GrowthProfile& profile() const { return profile_; }
  PhiMode mode() const { return mode_; }

private:
  GrowthProfile profile_;
  PhiMode mode_;
};

struct PhiDiagnostics {
  int k = 0;
  /* The k-th derivative reproduces the density up to the k-th power of the
   * root: max grid residual of phi^(k) = x1^k phi (expected ~ machine eps)
   * and of the reciprocal-scaled variant phi^(k) = x1^{-k} phi (large;
   * reported for contrast). */
  double ode_residual = 0.0;
  double ode_residual_reciprocal = 0.0;
  std::vector<double> derivs_at_zero;  // orders 1..k-2, all ~ 0
  double top_deriv_at_one = 0.0;       // order k-1 at x = 1, ~ 0
  double integral = 0.0;               // quadrature over [0,1], ~ 1
  double sup_deviation = 0.0;          // max |phi - 1| over the grid
  std::string to_json() const;
};

PhiDiagnostics phi_diagnostics(int k, int grid_points = 1000);

// CSV "x,phi" with grid_points+1 equally spaced rows on [0,1]
std::string phi_curve_csv(const PhiEvaluator& phi, int grid_points);

}
