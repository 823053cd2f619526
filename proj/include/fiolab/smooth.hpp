#pragma once

namespace fiolab {

// C^∞ step built from exp(-1/x) mollifiers: 0 for x <= 0, 1 for x >= 1.
double smoothstep(double x);

// C^∞ plateau profile of a radius: 1 for r <= inner, 0 for r >= outer.
double plateau(double r, double inner, double outer);

// exp(-1/(1-u^2)) on (-1,1), 0 outside.
double standard_bump(double u);
double standard_bump_derivative(double u);

// max |standard_bump'| over (-1,1); computed once from the closed form.
double standard_bump_derivative_max();

}  // namespace fiolab
