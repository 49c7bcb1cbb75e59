#pragma once

#include <cmath>
#include <cstdint>

namespace relaysec {

// All internal computation is in linear watts; dBm exists only at tool
// boundaries.
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);  // rejects watts <= 0

// Node placement. Mean channel power gains follow the d^-rho distance law.
struct Geometry {
  double d_sr = 5.0;  // source-relay distance, m
  double d_rd = 5.0;  // relay-destination distance, m
  double rho = 2.7;   // path-loss exponent

  void validate() const;
};

struct ChannelGains {
  double lambda_sr;
  double lambda_rd;
};

ChannelGains lambda_from_geometry(const Geometry& g);

// Physical constants of the two-hop source -> relay -> destination link.
// The relay-destination channel is reciprocal, so the jamming hop reuses
// lambda_rd and there is no separate destination->relay gain.
//
// Construction with p_s != p_d is legal (the simulator accepts it), but the
// closed-form metrics assume equal source and jamming power and reject it.
struct SystemParams {
  double p_s = 10.0;      // source transmit power, W
  double p_d = 10.0;      // destination jamming power, W
  double n0 = 1e-4;       // AWGN power at relay and destination, W
  double eta = 0.7;       // energy conversion efficiency, (0, 1]
  double theta_h = 1e-6;  // harvesting-circuit activation threshold, W
  double r_th = 0.5;      // target secrecy rate, bits/s/Hz
  double lambda_sr = 0.012965252773542099;  // mean gain of 5 m at rho 2.7
  double lambda_rd = 0.012965252773542099;

  void validate() const;
  bool equal_powers() const { return p_s == p_d; }
};

// Throws std::invalid_argument naming p_s/p_d when the equal-power
// assumption behind the closed forms does not hold.
void require_equal_powers(const SystemParams& p);

enum class Policy { ps, ts };

// The single free design variable of each receiver policy: the power
// splitting ratio beta, or the energy harvesting time fraction alpha.
struct PolicyParam {
  Policy kind;
  double value;

  static PolicyParam ps(double beta);
  static PolicyParam ts(double alpha);
};

// One fading realization (channel power gains).
struct ChannelSample {
  double g_sr;
  double g_rd;
};

// Bundle of analytic metric values for one parameter point.
struct MetricReport {
  double p_power_outage;
  double p_secrecy_outage_cond;   // given the harvester activates
  double p_secrecy_outage_total;  // activation failure folded in
  double p_pos_exact;
  double p_pos_approx;
  double ergodic_exact;
  double ergodic_approx;
  double ergodic_lower_bound;

  // Probabilities in [0,1], rates >= 0, bound below the high-SNR rate.
  void validate(double tol = 1e-6) const;
};

struct MeanSe {
  double mean = 0.0;
  double std_error = 0.0;
};

// Monte Carlo estimates with standard errors; a pure function of
// (seed, n_samples, snr_mode).
struct McEstimate {
  MeanSe power_outage;
  MeanSe secrecy_outage_cond;
  MeanSe secrecy_outage_total;
  MeanSe prob_pos;
  MeanSe ergodic;
  std::uint64_t n_samples = 0;
};

}  // namespace relaysec
