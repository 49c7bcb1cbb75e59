#include "relaysec/shared_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relaysec/special.hpp"

namespace relaysec {

namespace {

// The two-exponential formulas cancel catastrophically as the means meet;
// switch to the gamma-shaped branch inside this window.
bool means_numerically_equal(double l1, double l2) {
  return std::abs(l1 - l2) <= 1e-6 * std::max(l1, l2);
}

}  // namespace

double sum_exp_pdf(const SumExpDensity& d, double z) {
  if (!(d.lambda_1 > 0.0) || !(d.lambda_2 > 0.0)) {
    throw std::invalid_argument("sum_exp_pdf: means must be positive");
  }
  if (!(z >= 0.0)) {
    throw std::invalid_argument("sum_exp_pdf: requires z >= 0");
  }
  if (means_numerically_equal(d.lambda_1, d.lambda_2)) {
    const double l = d.lambda_1;
    return z / (l * l) * std::exp(-z / l);
  }
  return std::exp(-z / d.lambda_1) / (d.lambda_1 - d.lambda_2) +
         std::exp(-z / d.lambda_2) / (d.lambda_2 - d.lambda_1);
}

double power_outage_prob(const SystemParams& p) {
  p.validate();
  require_equal_powers(p);
  if (p.theta_h == 0.0) return 0.0;
  const double t = p.theta_h / p.p_s;
  if (means_numerically_equal(p.lambda_sr, p.lambda_rd)) {
    return lower_incomplete_gamma(2.0, t / p.lambda_sr);
  }
  const double l1 = p.lambda_sr;
  const double l2 = p.lambda_rd;
  const double v = 1.0 - l1 / (l1 - l2) * std::exp(-t / l1) -
                   l2 / (l2 - l1) * std::exp(-t / l2);
  return std::clamp(v, 0.0, 1.0);
}

double total_secrecy_outage(double p_pout, double p_out_cond) {
  if (!(p_pout >= 0.0 && p_pout <= 1.0)) {
    throw std::invalid_argument("p_pout: not a probability");
  }
  if (!(p_out_cond >= 0.0 && p_out_cond <= 1.0)) {
    throw std::invalid_argument("p_out_cond: not a probability");
  }
  return p_pout + (1.0 - p_pout) * p_out_cond;
}

double secrecy_rate(double gamma_d, double gamma_r, double time_factor) {
  if (!(time_factor > 0.0 && time_factor <= 1.0)) {
    throw std::invalid_argument("time_factor: must be in (0, 1]");
  }
  const double r = time_factor * std::log2((1.0 + gamma_d) / (1.0 + gamma_r));
  return std::max(r, 0.0);
}

}  // namespace relaysec
