#pragma once

#include <vector>

#include "jsdmix/mixture.hpp"
#include "jsdmix/pmf.hpp"

namespace jsdmix {

// Ray through the proportion square: (lambda_1, lambda_2) = (lambda,
// alpha*lambda). Both coordinates must land in [0,1].
struct RaySpec {
  RaySpec(double alpha, double lambda);

  double alpha;
  double lambda;
};

// Offset parameterization lambda_1 = lambda_min, lambda_2 = lambda_min +
// delta_lambda, used when both mixtures share the same component.
struct DeltaSpec {
  DeltaSpec(double lambda_min, double delta_lambda);

  double lambda_min;
  double delta_lambda;
};

// d/dlambda H(lambda*a + (1-lambda)*b) = -sum (a(x)-b(x)) (1 + ln r(x)).
// Throws std::domain_error when some symbol has r(x) = 0 but a(x) != b(x)
// (the derivative is unbounded there).
double entropy_derivative(const Pmf& a, const Pmf& b, Weight lambda);

// Analytic d/dlambda of lambda -> sjsd(p1, p2) along the ray, with the
// scenario's proportions replaced by (lambda, alpha*lambda). Requires
// lambda strictly inside (0, min(1, 1/alpha)).
double ray_sjsd_derivative(const MixtureScenario& s_template,
                           const RaySpec& ray);

// Analytic d/d(delta_lambda) of sjsd when both mixtures use the same
// component p_tilde and proportions (lambda, lambda + delta_lambda).
double delta_sjsd_derivative(const Pmf& p_tilde, const Pmf& q,
                             const DeltaSpec& spec);

// Checks second-order finite differences of f(r) = r * ln(lambda*r + q_val)
// over the grid; true iff all are >= -1e-12. Grid needs >= 3 points.
bool check_rlog_convexity(Weight lambda, double q_val,
                          const std::vector<double>& r_grid);

// Central difference (f(x+h) - f(x-h)) / (2h).
template <typename F>
double finite_difference(F&& f, double x, double step) {
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

}  // namespace jsdmix
