#include "relaysec/report.hpp"

#include "relaysec/policy_ps.hpp"
#include "relaysec/policy_ts.hpp"
#include "relaysec/shared_metrics.hpp"

namespace relaysec {

MetricReport compute_metric_report(const SystemParams& p,
                                   const PolicyParam& pol,
                                   const QuadSpec& spec) {
  p.validate();
  require_equal_powers(p);
  MetricReport r;
  r.p_power_outage = power_outage_prob(p);
  const double t = pol.value;
  if (pol.kind == Policy::ps) {
    r.p_secrecy_outage_cond = secrecy_outage_ps(p, t, spec);
    r.p_pos_exact = prob_pos_secrecy_ps_exact(p, t, spec);
    r.p_pos_approx = prob_pos_secrecy_ps_approx(p, t);
    r.ergodic_exact = ergodic_ps_exact(p, t, spec);
    r.ergodic_approx = ergodic_ps_approx(p, t, spec);
    r.ergodic_lower_bound = ergodic_ps_lower_bound(p, t);
  } else {
    r.p_secrecy_outage_cond = secrecy_outage_ts(p, t, spec);
    r.p_pos_exact = prob_pos_secrecy_ts_exact(p, t, spec);
    r.p_pos_approx = prob_pos_secrecy_ts_approx(p, t);
    r.ergodic_exact = ergodic_ts_exact(p, t, spec);
    r.ergodic_approx = ergodic_ts_approx(p, t, spec);
    r.ergodic_lower_bound = ergodic_ts_lower_bound(p, t);
  }
  r.p_secrecy_outage_total =
      total_secrecy_outage(r.p_power_outage, r.p_secrecy_outage_cond);
  return r;
}

}  // namespace relaysec
