#include "relaysec/policy_ts.hpp"

#include <cmath>
#include <stdexcept>

#include "relaysec/shared_metrics.hpp"

namespace relaysec {

namespace {

void check_ts_inputs(const SystemParams& p, double alpha) {
  p.validate();
  require_equal_powers(p);
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha: must be in [0, 1]");
  }
}

bool alpha_endpoint(double alpha) { return alpha <= 0.0 || alpha >= 1.0; }

}  // namespace

TsDerived TsDerived::from(const SystemParams& p, double alpha) {
  check_ts_inputs(p, alpha);
  if (alpha_endpoint(alpha)) {
    throw std::invalid_argument(
        "alpha: derived quantities need 0 < alpha < 1");
  }
  TsDerived d;
  const double P = p.p_s;
  const double n0 = p.n0;
  const double harvest = 2.0 * p.eta * alpha / (1.0 - alpha);
  d.delta = std::exp2(2.0 * p.r_th / (1.0 - alpha));
  const double t = d.delta - 1.0;
  d.theta1 =
      (t + std::sqrt(t * t + 4.0 * d.delta * P / (harvest * n0))) /
      (2.0 * P / n0);
  d.a_coef = n0 / (harvest * P);
  d.b_coef = n0 * n0 / (harvest * P * P);
  d.theta2_limit = std::sqrt(d.a_coef);
  d.theta3 = cubic_positive_root({d.a_coef, d.b_coef});
  d.m_x = P * p.lambda_sr / n0;
  d.m_y = P * p.lambda_rd / n0;
  d.m_z = harvest * p.lambda_rd;
  d.nu = {2.0 * p.eta * alpha * P,
          2.0 * p.eta * alpha * n0,
          n0 * (1.0 - alpha),
          P * d.delta,
          P,
          n0};
  return d;
}

double snr_relay_ts(const SystemParams& p, const ChannelSample& s) {
  return p.p_s * s.g_sr / (p.p_d * s.g_rd + p.n0);
}

double snr_dest_ts_exact(const SystemParams& p, double alpha,
                         const ChannelSample& s) {
  if (alpha_endpoint(alpha)) return 0.0;  // no harvest or no transmit time
  const double received = p.p_s * s.g_sr + p.p_d * s.g_rd;
  if (received <= 0.0) return 0.0;
  const double den = 2.0 * p.eta * alpha * s.g_rd * p.n0 +
                     p.n0 * (1.0 - alpha) +
                     p.n0 * p.n0 * (1.0 - alpha) / received;
  return 2.0 * p.eta * alpha * p.p_s * s.g_sr * s.g_rd / den;
}

double snr_dest_ts_approx(const SystemParams& p, double alpha,
                          const ChannelSample& s) {
  if (alpha_endpoint(alpha)) return 0.0;
  const double den = p.n0 * (2.0 * p.eta * alpha * s.g_rd + 1.0 - alpha);
  return 2.0 * p.eta * alpha * p.p_s * s.g_sr * s.g_rd / den;
}

double secrecy_outage_ts(const SystemParams& p, double alpha,
                         const QuadSpec& spec) {
  check_ts_inputs(p, alpha);
  if (alpha_endpoint(alpha)) return 1.0;
  const TsDerived d = TsDerived::from(p, alpha);
  return kernels::secrecy_outage({d.delta, d.theta1, d.nu}, p.lambda_sr,
                                 p.lambda_rd, spec);
}

double prob_pos_secrecy_ts_exact(const SystemParams& p, double alpha,
                                 const QuadSpec& spec) {
  check_ts_inputs(p, alpha);
  if (alpha_endpoint(alpha)) return 0.0;
  const TsDerived d = TsDerived::from(p, alpha);
  const double cond = kernels::pos_secrecy_conditional(
      {d.a_coef, d.b_coef}, p.lambda_sr, p.lambda_rd, spec);
  return (1.0 - power_outage_prob(p)) * cond;
}

double prob_pos_secrecy_ts_approx(const SystemParams& p, double alpha) {
  check_ts_inputs(p, alpha);
  if (alpha_endpoint(alpha)) return 0.0;
  const TsDerived d = TsDerived::from(p, alpha);
  return (1.0 - power_outage_prob(p)) *
         std::exp(-std::sqrt(d.a_coef) / p.lambda_rd);
}

namespace {

double ergodic_ts(const SystemParams& p, double alpha, const QuadSpec& spec,
                  bool exact) {
  if (alpha_endpoint(alpha)) return 0.0;  // zero energy or zero time
  auto snr_d = [&p, alpha, exact](double g_sr, double g_rd) {
    const ChannelSample s{g_sr, g_rd};
    return exact ? snr_dest_ts_exact(p, alpha, s)
                 : snr_dest_ts_approx(p, alpha, s);
  };
  auto snr_r = [&p](double g_sr, double g_rd) {
    return snr_relay_ts(p, {g_sr, g_rd});
  };
  const double tf = 0.5 * (1.0 - alpha);
  const double mean = kernels::mean_secrecy_rate(snr_d, snr_r, tf,
                                                 p.lambda_sr, p.lambda_rd,
                                                 spec);
  return (1.0 - power_outage_prob(p)) * mean;
}

}  // namespace

double ergodic_ts_exact(const SystemParams& p, double alpha,
                        const QuadSpec& spec) {
  check_ts_inputs(p, alpha);
  return ergodic_ts(p, alpha, spec, true);
}

double ergodic_ts_approx(const SystemParams& p, double alpha,
                         const QuadSpec& spec) {
  check_ts_inputs(p, alpha);
  return ergodic_ts(p, alpha, spec, false);
}

double ergodic_ts_lower_bound(const SystemParams& p, double alpha) {
  check_ts_inputs(p, alpha);
  if (alpha_endpoint(alpha)) return 0.0;
  const TsDerived d = TsDerived::from(p, alpha);
  const double tf = 0.5 * (1.0 - alpha);
  return (1.0 - power_outage_prob(p)) *
         kernels::rate_lower_bound(tf, d.m_x, d.m_y, d.m_z);
}

}  // namespace relaysec
