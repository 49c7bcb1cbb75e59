#include "relaysec/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "relaysec/shared_metrics.hpp"
#include "relaysec/special.hpp"

namespace relaysec::kernels {

double secrecy_outage(const OutageParams& op, double lambda_sr,
                      double lambda_rd, const QuadSpec& spec) {
  if (!std::isfinite(op.delta) || !std::isfinite(op.theta1)) {
    return 1.0;  // unreachable target rate
  }
  if (op.delta <= 1.0) {
    // zero target rate: the conditional exponential is identically 1
    return 1.0 - std::exp(-op.theta1 / lambda_rd);
  }
  const double gap = op.delta - 1.0;
  auto integrand = [&](double x) {
    const double nu = op.nu(x);
    // nu vanishes at theta1; the endpoint is a removable zero, and tiny
    // negative values from roundoff mean the same thing
    if (nu <= 0.0) return 0.0;
    return std::exp(-gap / (nu * lambda_sr) - x / lambda_rd);
  };
  const double v =
      integrate_semi_infinite(integrand, op.theta1, lambda_rd, spec);
  return std::clamp(1.0 - v / lambda_rd, 0.0, 1.0);
}

double pos_secrecy_conditional(const CubicCoeffs& c, double lambda_sr,
                               double lambda_rd, const QuadSpec& spec) {
  const double theta2 = std::sqrt(c.a_coef);
  const double theta3 = cubic_positive_root(c);
  auto integrand = [&](double x) {
    const double den = x * x - c.a_coef;
    if (den <= 0.0) return 0.0;  // psi -> +inf at the lower limit
    const double psi = c.b_coef / den - x;
    return std::exp(-psi / lambda_sr - x / lambda_rd);
  };
  double v = 0.0;
  if (theta3 > theta2) v = integrate_finite(integrand, theta2, theta3, spec);
  return std::clamp(std::exp(-theta3 / lambda_rd) + v / lambda_rd, 0.0, 1.0);
}

double mean_secrecy_rate(const SnrFn& snr_dest, const SnrFn& snr_relay,
                         double time_factor, double lambda_sr,
                         double lambda_rd, const QuadSpec& spec) {
  QuadSpec inner_spec = spec;
  inner_spec.abs_tol = 0.1 * spec.abs_tol;
  auto outer = [&](double g_rd) {
    auto inner = [&](double g_sr) {
      const double r =
          secrecy_rate(snr_dest(g_sr, g_rd), snr_relay(g_sr, g_rd),
                       time_factor);
      return r * std::exp(-g_sr / lambda_sr);
    };
    const double v =
        integrate_semi_infinite(inner, 0.0, lambda_sr, inner_spec);
    return v / lambda_sr * std::exp(-g_rd / lambda_rd);
  };
  const double v = integrate_semi_infinite(outer, 0.0, lambda_rd, spec);
  return std::max(v / lambda_rd, 0.0);
}

double t1_dest_log_bound(double m_x, double m_z) {
  // ln(1 + exp(j1 - j2)) with j1 = E ln(XZ) and j2 = E ln(Z+1)
  const double j1 = -2.0 * euler_constant() + std::log(m_x * m_z);
  const double j2 = exp_scaled_e1(1.0 / m_z);
  const double s = j1 - j2;
  if (s > 36.0) return s;  // log1p(exp(s)) to double precision
  return std::log1p(std::exp(s));
}

double t2_relay_log_mean(double m_x, double m_y) {
  if (std::abs(m_y / m_x - 1.0) <= 1e-6) {
    return 1.0 - exp_scaled_e1(1.0 / m_x) / m_x;
  }
  const double ex = -exp_scaled_e1(1.0 / m_x);  // e^{1/mx} Ei(-1/mx)
  const double ey = -exp_scaled_e1(1.0 / m_y);
  return m_x / (m_x - m_y) * (ey - ex);
}

double rate_lower_bound(double time_factor, double m_x, double m_y,
                        double m_z) {
  const double t1 = t1_dest_log_bound(m_x, m_z);
  const double t2 = t2_relay_log_mean(m_x, m_y);
  return std::max(time_factor * (t1 - t2) / std::log(2.0), 0.0);
}

}  // namespace relaysec::kernels
