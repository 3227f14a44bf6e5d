#pragma once

// F-distribution machinery used by the variable-rate-forgetting test.
// Non-integer degrees of freedom are fully supported.

namespace ad {

// Regularized incomplete beta function I_x(a, b), continued-fraction
// evaluation (Numerical Recipes style).
double beta_inc_reg(double a, double b, double x);

// CDF of the F distribution with d1, d2 degrees of freedom.
double f_cdf(double d1, double d2, double x);

// Inverse CDF. Requires d1, d2 > 0 and p in [0, 1); |CDF(result) - p| <= 1e-10.
// Throws std::domain_error on invalid arguments.
double f_quantile(double d1, double d2, double p);

}  // namespace ad
