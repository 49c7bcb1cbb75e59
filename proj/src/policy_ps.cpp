#include "relaysec/policy_ps.hpp"

#include <cmath>
#include <stdexcept>

#include "relaysec/shared_metrics.hpp"

namespace relaysec {

namespace {

void check_ps_inputs(const SystemParams& p, double beta) {
  p.validate();
  require_equal_powers(p);
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("beta: must be in [0, 1]");
  }
}

bool beta_endpoint(double beta) { return beta <= 0.0 || beta >= 1.0; }

}  // namespace

PsDerived PsDerived::from(const SystemParams& p, double beta) {
  check_ps_inputs(p, beta);
  if (beta_endpoint(beta)) {
    throw std::invalid_argument("beta: derived quantities need 0 < beta < 1");
  }
  PsDerived d;
  const double P = p.p_s;
  const double n0 = p.n0;
  d.delta = std::exp2(2.0 * p.r_th);
  const double t = (d.delta - 1.0) / (1.0 - beta);
  d.theta1 = (t + std::sqrt(t * t + 4.0 * d.delta * P / (p.eta * beta * n0))) /
             (2.0 * P / n0);
  d.a_coef = n0 / (p.eta * beta * P);
  d.b_coef = n0 * n0 / (p.eta * beta * (1.0 - beta) * P * P);
  d.theta2_limit = std::sqrt(d.a_coef);
  d.theta3 = cubic_positive_root({d.a_coef, d.b_coef});
  d.m_x = (1.0 - beta) * P * p.lambda_sr / n0;
  d.m_y = (1.0 - beta) * P * p.lambda_rd / n0;
  d.m_z = p.eta * beta * p.lambda_rd / (1.0 - beta);
  d.nu = {(1.0 - beta) * p.eta * beta * P,
          n0 * p.eta * beta,
          n0 * (1.0 - beta),
          (1.0 - beta) * P * d.delta,
          P * (1.0 - beta),
          n0};
  return d;
}

double snr_relay_ps(const SystemParams& p, double beta,
                    const ChannelSample& s) {
  return (1.0 - beta) * p.p_s * s.g_sr /
         ((1.0 - beta) * p.p_d * s.g_rd + p.n0);
}

double snr_dest_ps_exact(const SystemParams& p, double beta,
                         const ChannelSample& s) {
  const double received = p.p_s * s.g_sr + p.p_d * s.g_rd;
  if (received <= 0.0) return 0.0;  // no received power, no relayed signal
  const double den = p.eta * beta * s.g_rd * p.n0 + p.n0 * (1.0 - beta) +
                     p.n0 * p.n0 / received;
  return p.eta * beta * (1.0 - beta) * p.p_s * s.g_sr * s.g_rd / den;
}

double snr_dest_ps_approx(const SystemParams& p, double beta,
                          const ChannelSample& s) {
  const double den = p.n0 * (p.eta * beta * s.g_rd + 1.0 - beta);
  return p.eta * beta * (1.0 - beta) * p.p_s * s.g_sr * s.g_rd / den;
}

double secrecy_outage_ps(const SystemParams& p, double beta,
                         const QuadSpec& spec) {
  check_ps_inputs(p, beta);
  if (beta_endpoint(beta)) return 1.0;
  const PsDerived d = PsDerived::from(p, beta);
  return kernels::secrecy_outage({d.delta, d.theta1, d.nu}, p.lambda_sr,
                                 p.lambda_rd, spec);
}

double prob_pos_secrecy_ps_exact(const SystemParams& p, double beta,
                                 const QuadSpec& spec) {
  check_ps_inputs(p, beta);
  if (beta_endpoint(beta)) return 0.0;  // destination SNR is identically 0
  const PsDerived d = PsDerived::from(p, beta);
  const double cond = kernels::pos_secrecy_conditional(
      {d.a_coef, d.b_coef}, p.lambda_sr, p.lambda_rd, spec);
  return (1.0 - power_outage_prob(p)) * cond;
}

double prob_pos_secrecy_ps_approx(const SystemParams& p, double beta) {
  check_ps_inputs(p, beta);
  if (beta_endpoint(beta)) return 0.0;
  const PsDerived d = PsDerived::from(p, beta);
  return (1.0 - power_outage_prob(p)) *
         std::exp(-std::sqrt(d.a_coef) / p.lambda_rd);
}

namespace {

double ergodic_ps(const SystemParams& p, double beta, const QuadSpec& spec,
                  bool exact) {
  if (beta_endpoint(beta)) return 0.0;  // rate clamps to 0 everywhere
  auto snr_d = [&p, beta, exact](double g_sr, double g_rd) {
    const ChannelSample s{g_sr, g_rd};
    return exact ? snr_dest_ps_exact(p, beta, s)
                 : snr_dest_ps_approx(p, beta, s);
  };
  auto snr_r = [&p, beta](double g_sr, double g_rd) {
    return snr_relay_ps(p, beta, {g_sr, g_rd});
  };
  const double mean = kernels::mean_secrecy_rate(snr_d, snr_r, 0.5,
                                                 p.lambda_sr, p.lambda_rd,
                                                 spec);
  return (1.0 - power_outage_prob(p)) * mean;
}

}  // namespace

double ergodic_ps_exact(const SystemParams& p, double beta,
                        const QuadSpec& spec) {
  check_ps_inputs(p, beta);
  return ergodic_ps(p, beta, spec, true);
}

double ergodic_ps_approx(const SystemParams& p, double beta,
                         const QuadSpec& spec) {
  check_ps_inputs(p, beta);
  return ergodic_ps(p, beta, spec, false);
}

double ergodic_ps_lower_bound(const SystemParams& p, double beta) {
  check_ps_inputs(p, beta);
  if (beta_endpoint(beta)) return 0.0;
  const PsDerived d = PsDerived::from(p, beta);
  return (1.0 - power_outage_prob(p)) *
         kernels::rate_lower_bound(0.5, d.m_x, d.m_y, d.m_z);
}

}  // namespace relaysec
