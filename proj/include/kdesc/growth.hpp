#pragma once

#include <optional>
#include <string>

namespace kdesc {

/* Denominator of the avoider exponential generating function: the entire
 * function sum over l >= 0 of x^{kl}/(kl)! - x^{kl+1}/(kl+1)!. Consecutive
 * terms are summed as one nonnegative pair to avoid cancellation. */
double denominator(int k, double x);
double denominator_derivative(int k, double x);

struct GrowthProfile {
  int k = 0;
  double x1 = 0.0;   // smallest positive zero of the denominator
  double r_k = 0.0;  // 1/x1, the per-element growth rate of the counts
  double c_k = 0.0;  // leading coefficient, -1/(x1 * D'(x1))
  std::optional<double> gamma_hint;
  std::optional<double> warlimont_lower;  // a-priori bracket for x1, k >= 4
  std::optional<double> warlimont_upper;
  std::string to_json() const;
};

/* Locate the smallest positive zero by bisection inside [1, 1.5] for k = 3
 * and inside the a-priori bracket for k >= 4; derive the growth rate and
 * leading coefficient from it. Throws on a bracket without a sign change. */
GrowthProfile growth_rate(int k, double tol = 1e-13);

// closed forms available only at k = 3, kept as regression anchors
double k3_root_closed_form();           // 2*pi/(3*sqrt(3))
double k3_leading_coeff_closed_form();  // 3*sqrt(3)/(2*pi) * e^{pi/(3*sqrt(3))}

}
