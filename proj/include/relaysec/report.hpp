#pragma once

#include "relaysec/quadrature.hpp"
#include "relaysec/types.hpp"

namespace relaysec {

// Evaluate every analytic metric at one parameter point.
MetricReport compute_metric_report(const SystemParams& p,
                                   const PolicyParam& pol,
                                   const QuadSpec& spec = {});

}  // namespace relaysec
