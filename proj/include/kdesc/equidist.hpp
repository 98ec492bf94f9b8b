#pragma once

#include <string>

namespace kdesc {

/* Normalized overlap constant for a+1 runs with a gap couplings, computed
 * as a 2(a+1)-dimensional integral of first-entry densities against a gap
 * kernel. Two kernel variants are carried side by side: the literal gap
 * weight (which dips below zero near the corner) and the endpoint-event
 * probability it approximates; they are sampled on identical draws. */
struct EquidistReport {
  int k = 0;
  int a = 0;
  long long samples = 0;
  unsigned long long seed = 0;
  double value = 0.0;         // gap-weight kernel, stratified Monte Carlo
  double stderr_value = 0.0;
  double event_value = 0.0;   // endpoint-event kernel, same draws
  double event_stderr = 0.0;
  bool has_quadrature = false;  // set at a == 1
  double quad_value = 0.0;      // nested adaptive quadrature, gap kernel
  double quad_error = 0.0;
  double quad_event_value = 0.0;
  double quad_event_error = 0.0;
  // scaling candidates relating this constant to count ratios
  double prefactor_single = 0.0;   // c^a x1^(ak) / k!
  double prefactor_product = 0.0;  // c^a x1^(ak) / (k!)^a
  std::string to_json() const;
};

/* a == 0 is the empty product and returns exactly 1. For a >= 1 the
 * sampler stratifies every y coordinate, runs one generator per cell
 * seeded by seed + cell index, and merges cells in index order, so the
 * result is bit-identical for a given (k, a, samples, seed) regardless
 * of thread count. Requires samples >= 100000 when a >= 1. */
EquidistReport equidist_constant(int k, int a, long long samples,
                                 unsigned long long seed);

}
