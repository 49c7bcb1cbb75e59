#pragma once

#include "relaysec/types.hpp"

namespace relaysec {

// Density of the sum of two independent exponentials (activation test
// variable). Continuous across lambda_1 -> lambda_2.
struct SumExpDensity {
  double lambda_1;
  double lambda_2;
};

double sum_exp_pdf(const SumExpDensity& d, double z);

// Probability that the received power P*(g_sr + g_rd) stays below the
// activation threshold. Identical for both receiver policies. Requires
// equal source/jamming power.
double power_outage_prob(const SystemParams& p);

// Combine activation failure with the conditional secrecy outage.
double total_secrecy_outage(double p_pout, double p_out_cond);

// Instantaneous secrecy rate: time_factor * [log2((1+gd)/(1+gr))]^+.
// The power splitting policy passes 1/2, time switching (1-alpha)/2.
double secrecy_rate(double gamma_d, double gamma_r, double time_factor);

}  // namespace relaysec
