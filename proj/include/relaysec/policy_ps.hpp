#pragma once

#include "relaysec/kernels.hpp"
#include "relaysec/quadrature.hpp"
#include "relaysec/types.hpp"

namespace relaysec {

// Quantities derived from (params, beta) that parameterize the shared metric
// kernels for the power splitting policy.
struct PsDerived {
  double delta;         // 2^(2*r_th)
  double theta1;        // lower limit of the outage integral
  double theta2_limit;  // lower limit of the positive-secrecy integral
  double theta3;        // upper limit; positive root of the derived cubic
  double a_coef;        // cubic: x^3 - a_coef*x - b_coef = 0
  double b_coef;
  double m_x, m_y, m_z;  // mean values behind the rate lower bound
  kernels::NuRational nu;

  // Requires equal powers and beta strictly inside (0, 1).
  static PsDerived from(const SystemParams& p, double beta);
};

double snr_relay_ps(const SystemParams& p, double beta,
                    const ChannelSample& s);
double snr_dest_ps_exact(const SystemParams& p, double beta,
                         const ChannelSample& s);
double snr_dest_ps_approx(const SystemParams& p, double beta,
                          const ChannelSample& s);

// Conditional secrecy outage probability (high-SNR destination form).
// beta at either endpoint gives 1: no harvested power or no signal.
double secrecy_outage_ps(const SystemParams& p, double beta,
                         const QuadSpec& spec = {});

// Probability of strictly positive secrecy rate, exact destination SNR.
double prob_pos_secrecy_ps_exact(const SystemParams& p, double beta,
                                 const QuadSpec& spec = {});
// High-SNR form: (1 - P_pout) * exp(-sqrt(a_coef)/lambda_rd).
double prob_pos_secrecy_ps_approx(const SystemParams& p, double beta);

// Ergodic secrecy rate by nested quadrature (the slowest operations here).
double ergodic_ps_exact(const SystemParams& p, double beta,
                        const QuadSpec& spec = {});
double ergodic_ps_approx(const SystemParams& p, double beta,
                         const QuadSpec& spec = {});

// Closed-form lower bound on the high-SNR ergodic secrecy rate.
double ergodic_ps_lower_bound(const SystemParams& p, double beta);

}  // namespace relaysec
