#pragma once

#include <functional>

#include "relaysec/quadrature.hpp"
#include "relaysec/special.hpp"

// Metric kernels shared by the two receiver policies. Each policy reduces to
// the same integral shapes; only the parameterization differs.
namespace relaysec::kernels {

// SNR-gap function nu(x) = a*x/(b*x + c) - d/(e*x + f). Both policies'
// destination-minus-threshold*relay gap has this rational form in the
// relay-destination gain.
struct NuRational {
  double a, b, c, d, e, f;

  double operator()(double x) const {
    return a * x / (b * x + c) - d / (e * x + f);
  }
};

struct OutageParams {
  double delta;   // 2^(2*R_th / time share); 1 means zero target rate
  double theta1;  // positive root of nu(x) = 0
  NuRational nu;
};

// Conditional secrecy outage probability:
//   1 - (1/lrd) * integral_{theta1}^inf exp(-(delta-1)/(nu(x)*lsr) - x/lrd) dx
// The delta == 1 case collapses to the closed form 1 - exp(-theta1/lrd).
double secrecy_outage(const OutageParams& op, double lambda_sr,
                      double lambda_rd, const QuadSpec& spec);

// Conditional probability of strictly positive secrecy rate:
//   exp(-theta3/lrd) + (1/lrd) * integral_{sqrt(a)}^{theta3}
//       exp(-psi(x)/lsr - x/lrd) dx,   psi(x) = b/(x^2 - a) - x
// where theta3 is the positive root of the cubic x^3 - a*x - b.
double pos_secrecy_conditional(const CubicCoeffs& c, double lambda_sr,
                               double lambda_rd, const QuadSpec& spec);

using SnrFn = std::function<double(double, double)>;  // (g_sr, g_rd) -> SNR

// Mean secrecy rate over the fading distribution, by nested quadrature:
// outer over the relay-destination gain, inner over the source-relay gain,
// rate clamp applied inside the integrand.
double mean_secrecy_rate(const SnrFn& snr_dest, const SnrFn& snr_relay,
                         double time_factor, double lambda_sr,
                         double lambda_rd, const QuadSpec& spec);

// Closed-form pieces of the ergodic rate lower bound. m_x, m_y are the mean
// normalized SNR variables of the two hops, m_z the mean harvest-path gain.
double t1_dest_log_bound(double m_x, double m_z);   // >= E ln(1 + XZ/(Z+1))
double t2_relay_log_mean(double m_x, double m_y);   // E ln(1 + X/(Y+1))

// max(time_factor * (T1 - T2) / ln 2, 0); caller scales by the activation
// probability.
double rate_lower_bound(double time_factor, double m_x, double m_y,
                        double m_z);

}  // namespace relaysec::kernels
