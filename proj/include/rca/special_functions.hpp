#pragma once

namespace rca::math {

/// Complementary error function.
double erfc(double x);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double igamc(double a, double x);

}  // namespace rca::math
