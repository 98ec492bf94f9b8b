#pragma once

#include <functional>

namespace kdesc {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = true;
};

/* Adaptive integration over [a, b] with a nested 7/15-point rule and
 * interval bisection. The error estimate per interval is the difference
 * between the two rules; intervals split until the estimate drops below the
 * absolute tolerance (shared proportionally between halves). */
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol = 1e-10,
                           int max_depth = 40);

}
