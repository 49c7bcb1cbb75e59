#include "relaysec/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relaysec {

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) {
  if (!(watts > 0.0)) {
    throw std::invalid_argument("watts_to_dbm: power must be positive");
  }
  return 10.0 * std::log10(watts) + 30.0;
}

void Geometry::validate() const {
  if (!(d_sr > 0.0)) throw std::invalid_argument("d_sr: must be positive");
  if (!(d_rd > 0.0)) throw std::invalid_argument("d_rd: must be positive");
  if (!(rho >= 1.0)) throw std::invalid_argument("rho: must be >= 1");
}

ChannelGains lambda_from_geometry(const Geometry& g) {
  g.validate();
  return {std::pow(g.d_sr, -g.rho), std::pow(g.d_rd, -g.rho)};
}

void SystemParams::validate() const {
  if (!(p_s > 0.0)) throw std::invalid_argument("p_s: must be positive");
  if (!(p_d > 0.0)) throw std::invalid_argument("p_d: must be positive");
  if (!(n0 > 0.0)) throw std::invalid_argument("n0: must be positive");
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::invalid_argument("eta: must be in (0, 1]");
  if (!(theta_h >= 0.0)) throw std::invalid_argument("theta_h: must be >= 0");
  if (!(r_th >= 0.0)) throw std::invalid_argument("r_th: must be >= 0");
  if (!(lambda_sr > 0.0))
    throw std::invalid_argument("lambda_sr: must be positive");
  if (!(lambda_rd > 0.0))
    throw std::invalid_argument("lambda_rd: must be positive");
}

void require_equal_powers(const SystemParams& p) {
  if (!p.equal_powers()) {
    throw std::invalid_argument(
        "p_s/p_d: closed-form metrics assume equal source and jamming power");
  }
}

PolicyParam PolicyParam::ps(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("beta: must be in [0, 1]");
  }
  return {Policy::ps, beta};
}

PolicyParam PolicyParam::ts(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha: must be in [0, 1]");
  }
  return {Policy::ts, alpha};
}

void MetricReport::validate(double tol) const {
  auto prob = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument(std::string(name) + ": not a probability");
    }
  };
  prob(p_power_outage, "p_power_outage");
  prob(p_secrecy_outage_cond, "p_secrecy_outage_cond");
  prob(p_secrecy_outage_total, "p_secrecy_outage_total");
  prob(p_pos_exact, "p_pos_exact");
  prob(p_pos_approx, "p_pos_approx");
  auto rate = [](double v, const char* name) {
    if (!(v >= 0.0)) {
      throw std::invalid_argument(std::string(name) + ": negative rate");
    }
  };
  rate(ergodic_exact, "ergodic_exact");
  rate(ergodic_approx, "ergodic_approx");
  rate(ergodic_lower_bound, "ergodic_lower_bound");
  if (!(ergodic_lower_bound <= ergodic_approx + tol)) {
    throw std::invalid_argument(
        "ergodic_lower_bound: exceeds the high-SNR ergodic rate");
  }
}

}  // namespace relaysec
