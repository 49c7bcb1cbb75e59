#include "relaysec/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relaysec {

namespace {

constexpr double kEuler = 0.57721566490153286060651209008240243;

// Continued fraction for exp(z)*E1(z), z > 0 (modified Lentz). Converges in
// a handful of terms once z is a few units; the series branch covers the
// rest of the implementation's domain.
double e1_scaled_cf(double z, int max_iter) {
  double b = z + 1.0;
  double c = 1e308;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= max_iter; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h;
}

// Ei(x) = euler + ln|x| + sum x^k/(k*k!) for x < 0, |x| modest.
double ei_series(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k <= 200; ++k) {
    term *= x / k;
    const double add = term / k;
    sum += add;
    if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return kEuler + std::log(-x) + sum;
}

}  // namespace

double euler_constant() { return kEuler; }

double exp_integral_ei(double x) {
  if (!(x < 0.0)) {
    throw std::invalid_argument("exp_integral_ei: requires x < 0");
  }
  if (x >= -6.0) return ei_series(x);
  const double z = -x;
  return -std::exp(-z) * e1_scaled_cf(z, 200);
}

double exp_scaled_e1(double z) {
  if (!(z > 0.0)) {
    throw std::invalid_argument("exp_scaled_e1: requires z > 0");
  }
  if (z <= 6.0) return std::exp(z) * (-ei_series(-z));
  return e1_scaled_cf(z, 200);
}

double lower_incomplete_gamma(double a, double x) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("lower_incomplete_gamma: requires a > 0");
  }
  if (!(x >= 0.0)) {
    throw std::invalid_argument("lower_incomplete_gamma: requires x >= 0");
  }
  if (x == 0.0) return 0.0;
  const double gamma_a = std::tgamma(a);
  const double log_prefix = -x + a * std::log(x) - std::lgamma(a);

  if (x < a + 1.0) {
    // series for the regularized P(a, x)
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(log_prefix) * gamma_a;
  }

  // continued fraction for Q(a, x), then P = 1 - Q
  double b = x + 1.0 - a;
  double c = 1e308;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    d = 1.0 / d;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  const double q = std::exp(log_prefix) * h;
  return (1.0 - q) * gamma_a;
}

double cubic_positive_root(const CubicCoeffs& c) {
  if (!(c.a_coef > 0.0) || !(c.b_coef > 0.0)) {
    throw std::invalid_argument(
        "cubic_positive_root: coefficients must be positive");
  }
  const double p3 = c.a_coef / 3.0;
  const double half_b = c.b_coef / 2.0;
  const double disc = half_b * half_b - p3 * p3 * p3;

  double root;
  if (disc >= 0.0) {
    // one real root; u*v = p3 sidesteps the cancellation in half_b - sqrt
    const double u = std::cbrt(half_b + std::sqrt(disc));
    root = u + p3 / u;
  } else {
    // three real roots; the largest is the unique positive one
    const double arg = std::clamp(half_b / (p3 * std::sqrt(p3)), -1.0, 1.0);
    root = 2.0 * std::sqrt(p3) * std::cos(std::acos(arg) / 3.0);
  }

  for (int it = 0; it < 4; ++it) {
    const double fx = (root * root - c.a_coef) * root - c.b_coef;
    const double dfx = 3.0 * root * root - c.a_coef;
    if (!(dfx > 0.0)) break;
    const double step = fx / dfx;
    root -= step;
    if (std::abs(step) <= 1e-16 * root) break;
  }
  return root;
}

}  // namespace relaysec
