#pragma once

#include "relaysec/kernels.hpp"
#include "relaysec/quadrature.hpp"
#include "relaysec/types.hpp"

namespace relaysec {

// Time switching mirror of PsDerived. delta carries the (1-alpha) time share
// in the exponent and blows up as alpha -> 1; the kernels treat a non-finite
// delta as certain outage.
struct TsDerived {
  double delta;  // 2^(2*r_th/(1-alpha))
  double theta1;
  double theta2_limit;
  double theta3;
  double a_coef;
  double b_coef;
  double m_x, m_y, m_z;
  kernels::NuRational nu;

  static TsDerived from(const SystemParams& p, double alpha);
};

// Independent of alpha: the harvesting phase does not split power.
double snr_relay_ts(const SystemParams& p, const ChannelSample& s);
double snr_dest_ts_exact(const SystemParams& p, double alpha,
                         const ChannelSample& s);
double snr_dest_ts_approx(const SystemParams& p, double alpha,
                          const ChannelSample& s);

double secrecy_outage_ts(const SystemParams& p, double alpha,
                         const QuadSpec& spec = {});

double prob_pos_secrecy_ts_exact(const SystemParams& p, double alpha,
                                 const QuadSpec& spec = {});
double prob_pos_secrecy_ts_approx(const SystemParams& p, double alpha);

double ergodic_ts_exact(const SystemParams& p, double alpha,
                        const QuadSpec& spec = {});
double ergodic_ts_approx(const SystemParams& p, double alpha,
                         const QuadSpec& spec = {});

double ergodic_ts_lower_bound(const SystemParams& p, double alpha);

}  // namespace relaysec
