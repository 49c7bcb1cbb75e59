#pragma once

#include <functional>
#include <stdexcept>

namespace relaysec {

struct QuadSpec {
  double abs_tol = 1e-9;
  double rel_tol = 1e-7;
  int max_subdivisions = 2000;
};

// Raised when the adaptive scheme cannot reach the requested tolerance;
// carries the best estimate and its error bound.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate, double bound)
      : std::runtime_error(what), best_estimate(estimate), error_bound(bound) {}

  double best_estimate;
  double error_bound;
};

// Adaptive Gauss-Kronrod (7-15) on [a, b].
double integrate_finite(const std::function<double(double)>& f, double a,
                        double b, const QuadSpec& spec = {});

// Integral over [a, inf) of an integrand eventually dominated by
// exp(-x/decay_scale). Truncates at a + tail_multiples*decay_scale and
// integrates a geometrically graded partition of the remainder.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               double a, double decay_scale,
                               const QuadSpec& spec = {},
                               int tail_multiples = 40);

}  // namespace relaysec
