#include "relaysec/optimize.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <vector>

#include "relaysec/policy_ps.hpp"
#include "relaysec/policy_ts.hpp"
#include "relaysec/shared_metrics.hpp"

namespace relaysec {

namespace {

void check_spec(const OptimizeSpec& spec) {
  if (spec.coarse_grid_points < 5) {
    throw std::invalid_argument("coarse_grid_points: must be >= 5");
  }
  if (!(spec.refine_tol > 0.0)) {
    throw std::invalid_argument("refine_tol: must be positive");
  }
  if (!(spec.lower > 0.0 && spec.upper < 1.0 && spec.lower < spec.upper)) {
    throw std::invalid_argument("bounds: need 0 < lower < upper < 1");
  }
}

}  // namespace

OptimizeResult minimize_scalar(const std::function<double(double)>& f,
                               const OptimizeSpec& spec) {
  check_spec(spec);
  const int n = spec.coarse_grid_points;
  std::vector<double> xs(n), vs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = spec.lower + (spec.upper - spec.lower) * i / (n - 1);
  }

  // grid scan; points are independent, evaluate in parallel
  std::exception_ptr fail;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    try {
      vs[i] = f(xs[i]);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!fail) fail = std::current_exception();
      vs[i] = 0.0;
    }
  }
  if (fail) std::rethrow_exception(fail);

  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (vs[i] < vs[best]) best = i;  // strict: ties keep the smaller param
  }
  if (best == 0 || best == n - 1) {
    return {xs[best], vs[best], true};  // no bracket to refine
  }

  // golden-section refinement of the bracketing interval
  const double inv_phi = 0.6180339887498949;
  double a = xs[best - 1];
  double b = xs[best + 1];
  double best_x = xs[best];
  double best_v = vs[best];
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > spec.refine_tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    const double x = fc <= fd ? c : d;
    const double v = fc <= fd ? fc : fd;
    if (v < best_v || (v == best_v && x < best_x)) {
      best_v = v;
      best_x = x;
    }
  }
  // the coarse grid stays authoritative: never return a worse point
  return {best_x, best_v, false};
}

OptimizeResult optimize_policy(const SystemParams& p, Policy kind,
                               const OptimizeSpec& spec,
                               const QuadSpec& quad) {
  p.validate();
  require_equal_powers(p);
  const double ppout = power_outage_prob(p);

  std::function<double(double)> objective;
  bool negate = false;
  if (spec.objective == Objective::min_secrecy_outage) {
    objective = [&p, kind, &quad, ppout](double t) {
      const double cond = kind == Policy::ps ? secrecy_outage_ps(p, t, quad)
                                             : secrecy_outage_ts(p, t, quad);
      return total_secrecy_outage(ppout, cond);
    };
  } else {
    negate = true;
    objective = [&p, kind, &quad](double t) {
      return -(kind == Policy::ps ? ergodic_ps_exact(p, t, quad)
                                  : ergodic_ts_exact(p, t, quad));
    };
  }

  OptimizeResult r = minimize_scalar(objective, spec);
  if (negate) r.value = -r.value;
  return r;
}

}  // namespace relaysec
