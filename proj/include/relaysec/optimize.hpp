#pragma once

#include <functional>

#include "relaysec/quadrature.hpp"
#include "relaysec/types.hpp"

namespace relaysec {

enum class Objective { min_secrecy_outage, max_ergodic_rate };

struct OptimizeSpec {
  Objective objective = Objective::min_secrecy_outage;
  int coarse_grid_points = 41;
  double refine_tol = 1e-4;  // on the policy parameter
  double lower = 0.001;      // bounds strictly inside (0, 1)
  double upper = 0.999;
};

struct OptimizeResult {
  double param;
  double value;
  bool boundary;  // best grid value sat on a bound; no bracket to refine
};

// Coarse grid scan followed by golden-section refinement of the bracketing
// interval. The grid is authoritative: refinement never returns a point
// worse than the best grid value. Ties break toward the smaller parameter.
OptimizeResult minimize_scalar(const std::function<double(double)>& f,
                               const OptimizeSpec& spec);

// Optimize the policy parameter (beta or alpha) for minimum total secrecy
// outage or maximum ergodic secrecy rate (exact destination SNR form).
OptimizeResult optimize_policy(const SystemParams& p, Policy kind,
                               const OptimizeSpec& spec,
                               const QuadSpec& quad = {});

}  // namespace relaysec
