#pragma once

#include "lusin/quadrature.hpp"

namespace lusin {

// Riemann zeta on (1, inf), relative error <= 1e-12.
double zeta(double s);

// zeta(s) - 1 without cancellation; keeps relative accuracy for large s.
double zeta_minus_one(double s);

// Gamma(x) = int_0^inf e^-t t^(x-1) dt for x > 0, relative error <= 1e-12.
double gamma(double x);

// Upper incomplete Gamma(x, y) = int_y^inf e^-t t^(x-1) dt,
// x > 0, y >= 0; relative error <= 1e-10. Gamma(x, 0) == gamma(x).
double upper_incomplete_gamma(double x, double y);

// Exponential integral E1(x) = int_1^inf e^(-x t)/t dt for x > 0,
// relative error <= 1e-10.
double exp_integral_e1(double x);

} // namespace lusin
