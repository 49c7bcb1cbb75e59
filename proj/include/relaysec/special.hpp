#pragma once

namespace relaysec {

// Euler-Mascheroni constant.
double euler_constant();

// Exponential integral Ei(x) for strictly negative arguments. Power series
// for |x| <= 6, continued fraction beyond. Absolute error <= 1e-12.
double exp_integral_ei(double x);

// exp(z) * E1(z) for z > 0, evaluated without overflow for large z.
// E1(z) = -Ei(-z). Needed by the closed-form rate bounds where z = 1/m can
// exceed the range of exp().
double exp_scaled_e1(double z);

// Lower incomplete gamma function: integral of t^(a-1) e^-t over [0, x].
double lower_incomplete_gamma(double a, double x);

// Depressed cubic x^3 - a_coef*x - b_coef = 0 with positive coefficients.
struct CubicCoeffs {
  double a_coef;
  double b_coef;
};

// The unique positive real root. With both coefficients positive there is
// exactly one, and it lies above sqrt(a_coef). Uses the trigonometric
// three-root form when the discriminant is negative, the stable Cardano
// arrangement otherwise, plus a Newton polish.
double cubic_positive_root(const CubicCoeffs& c);

}  // namespace relaysec
