#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "relaysec/kernels.hpp"
#include "relaysec/montecarlo.hpp"
#include "relaysec/policy_ps.hpp"
#include "relaysec/shared_metrics.hpp"
#include "relaysec/special.hpp"

using namespace relaysec;

namespace {

SystemParams stock() { return SystemParams{}; }

// literal transcription of the published derived quantities, kept separate
// from the library's shared-kernel parameterization on purpose
double nu_literal(const SystemParams& p, double beta, double x) {
  const double P = p.p_s;
  const double delta = std::exp2(2.0 * p.r_th);
  return (1.0 - beta) *
         (p.eta * beta * P * x / (p.n0 * (p.eta * beta * x + 1.0 - beta)) -
          P * delta / (P * (1.0 - beta) * x + p.n0));
}

double theta1_literal(const SystemParams& p, double beta) {
  const double P = p.p_s;
  const double delta = std::exp2(2.0 * p.r_th);
  const double t = (delta - 1.0) / (1.0 - beta);
  return (t + std::sqrt(t * t + 4.0 * delta * P / (p.eta * beta * p.n0))) /
         (2.0 * P / p.n0);
}

SystemParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SystemParams p;
  p.p_s = p.p_d = std::pow(10.0, -1.0 + 3.0 * u(rng));
  p.n0 = std::pow(10.0, -6.0 + 4.0 * u(rng));
  p.eta = 0.1 + 0.9 * u(rng);
  p.theta_h = 1e-6;
  p.lambda_sr = std::pow(1.0 + 8.0 * u(rng), -(1.0 + 3.0 * u(rng)));
  p.lambda_rd = std::pow(1.0 + 8.0 * u(rng), -(1.0 + 3.0 * u(rng)));
  return p;
}

}  // namespace

TEST_CASE("derived quantities match the literal transcription") {
  SystemParams p = stock();
  for (double beta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const PsDerived d = PsDerived::from(p, beta);
    CHECK(d.theta1 ==
          doctest::Approx(theta1_literal(p, beta)).epsilon(1e-12));
    // away from the root, where the gap terms do not cancel
    for (double x : {d.theta1 * 1.5, d.theta1 * 3.0, 0.05, 0.1, 0.2}) {
      CHECK(d.nu(x) == doctest::Approx(nu_literal(p, beta, x)).epsilon(1e-11));
    }
    // theta1 is the root of the gap function
    CHECK(std::abs(d.nu(d.theta1)) <= 1e-10 * (p.p_s / p.n0));
    // the cubic root sits above the integral's lower limit
    CHECK(d.theta3 > d.theta2_limit);
    CHECK(d.m_x ==
          doctest::Approx((1.0 - beta) * p.p_s * p.lambda_sr / p.n0));
  }
}

TEST_CASE("relay SNR") {
  SystemParams p = stock();
  CHECK(snr_relay_ps(p, 1.0, {0.02, 0.01}) == 0.0);
  CHECK(snr_relay_ps(p, 0.5, {0.0, 0.01}) == 0.0);
  CHECK(snr_relay_ps(p, 0.5, {0.02, 0.01}) ==
        doctest::Approx(1.9960079840319361).epsilon(1e-13));
}

TEST_CASE("destination SNR, exact and high-SNR forms") {
  SystemParams p = stock();
  const double lam = p.lambda_sr;
  const ChannelSample s{lam, lam};

  CHECK(snr_dest_ps_exact(p, 0.0, s) == 0.0);
  CHECK(snr_dest_ps_exact(p, 1.0, s) == 0.0);
  CHECK(snr_dest_ps_exact(p, 0.5, {0.0, 0.0}) == 0.0);

  CHECK(snr_dest_ps_exact(p, 0.5, s) ==
        doctest::Approx(5.8260533139176124).epsilon(1e-12));
  CHECK(snr_dest_ps_approx(p, 0.5, s) ==
        doctest::Approx(5.8305064885689866).epsilon(1e-12));

  // independent rearrangement of the same expression
  auto exact_alt = [&](double beta, double x, double y) {
    const double pr = p.p_s * x + p.p_d * y;
    const double num = p.eta * beta * (1.0 - beta) * p.p_s * x * y * pr;
    const double den = pr * (p.eta * beta * y * p.n0 + p.n0 * (1.0 - beta)) +
                       p.n0 * p.n0;
    return num / den;
  };
  CHECK(snr_dest_ps_exact(p, 0.5, s) ==
        doctest::Approx(exact_alt(0.5, lam, lam)).epsilon(1e-12));

  // dropping a positive denominator term only increases the quotient
  std::mt19937_64 rng(3);
  std::exponential_distribution<double> e(1.0 / lam);
  for (int i = 0; i < 2000; ++i) {
    const ChannelSample cs{e(rng), e(rng)};
    for (double beta : {0.1, 0.5, 0.9}) {
      CHECK(snr_dest_ps_approx(p, beta, cs) >=
            snr_dest_ps_exact(p, beta, cs));
    }
  }
  const double gap = (snr_dest_ps_approx(p, 0.5, s) -
                      snr_dest_ps_exact(p, 0.5, s)) /
                     snr_dest_ps_approx(p, 0.5, s);
  CHECK(gap < 1e-3);
  CHECK(gap > 0.0);
}

TEST_CASE("secrecy outage closed-form branch at zero target rate") {
  SystemParams p = stock();
  p.r_th = 0.0;
  for (double beta : {0.2, 0.5, 0.8}) {
    const double want =
        1.0 - std::exp(-std::sqrt(p.n0 / (p.eta * beta * p.p_s)) /
                       p.lambda_rd);
    CHECK(secrecy_outage_ps(p, beta) ==
          doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("secrecy outage endpoints and limits") {
  SystemParams p = stock();
  CHECK(secrecy_outage_ps(p, 0.0) == 1.0);
  CHECK(secrecy_outage_ps(p, 1.0) == 1.0);
  CHECK(secrecy_outage_ps(p, 1e-6) > 0.999);
}

TEST_CASE("secrecy outage nondecreasing in the target rate") {
  SystemParams p = stock();
  double prev = -1.0;
  for (double r : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0}) {
    p.r_th = r;
    const double v = secrecy_outage_ps(p, 0.5);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("zero-rate identity against the high-SNR positive-secrecy form") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    SystemParams p = random_params(rng);
    p.r_th = 0.0;
    const double beta = 0.01 + 0.98 * u(rng);
    const double outage = secrecy_outage_ps(p, beta);
    const double pos = prob_pos_secrecy_ps_approx(p, beta) /
                       (1.0 - power_outage_prob(p));
    CHECK(std::abs(outage + pos - 1.0) <= 1e-9);
  }
}

TEST_CASE("secrecy outage agrees with the exact-SNR simulation") {
  SystemParams p = stock();
  McConfig cfg;
  cfg.seed = 42;
  for (double beta : {0.25, 0.5, 0.75}) {
    const double analytic = total_secrecy_outage(
        power_outage_prob(p), secrecy_outage_ps(p, beta));
    const McEstimate mc = estimate_metrics(p, PolicyParam::ps(beta), cfg);
    CHECK(std::abs(analytic - mc.secrecy_outage_total.mean) <= 0.015);
  }
}

TEST_CASE("secrecy outage matches the approx-SNR simulation at 3 sigma") {
  SystemParams p = stock();
  McConfig cfg;
  cfg.seed = 43;
  cfg.snr_mode = SnrMode::high_snr_approx;
  const double analytic = total_secrecy_outage(power_outage_prob(p),
                                               secrecy_outage_ps(p, 0.5));
  const McEstimate mc = estimate_metrics(p, PolicyParam::ps(0.5), cfg);
  CHECK(std::abs(analytic - mc.secrecy_outage_total.mean) <=
        3.0 * mc.secrecy_outage_total.std_error);
}

TEST_CASE("positive secrecy probability, structure and limits") {
  SystemParams p = stock();
  const PsDerived d = PsDerived::from(p, 0.5);
  // psi is positive just above the lower limit and zero at the cubic root
  auto psi = [&](double x) {
    return d.b_coef / (x * x - d.a_coef) - x;
  };
  CHECK(psi(d.theta2_limit * 1.0000001) > 0.0);
  CHECK(std::abs(psi(d.theta3)) <= 1e-9 * d.theta3);
  CHECK(psi(d.theta3 * 1.01) < 0.0);

  // strong harvesting and power: both roots collapse and the probability
  // approaches the activation probability
  SystemParams strong = p;
  strong.p_s = strong.p_d = 1e8;
  strong.eta = 1.0;
  const double lim = prob_pos_secrecy_ps_exact(strong, 0.5);
  CHECK(lim >= 0.999 * (1.0 - power_outage_prob(strong)));
  CHECK(lim <= 1.0);
}

TEST_CASE("positive secrecy probability vs simulated frequency") {
  SystemParams p = stock();
  McConfig cfg;
  cfg.seed = 44;
  for (double beta : {0.3, 0.5}) {
    const double analytic = prob_pos_secrecy_ps_exact(p, beta);
    const McEstimate mc = estimate_metrics(p, PolicyParam::ps(beta), cfg);
    CHECK(std::abs(analytic - mc.prob_pos.mean) <= 0.01);
  }
}

TEST_CASE("high-SNR positive secrecy form tracks the exact one") {
  SystemParams p = stock();
  for (double beta : {0.2, 0.5, 0.8}) {
    CHECK(std::abs(prob_pos_secrecy_ps_exact(p, beta) -
                   prob_pos_secrecy_ps_approx(p, beta)) <= 0.01);
  }
  // fixed eta: the approx argument stays finite as beta -> 1
  CHECK(prob_pos_secrecy_ps_approx(p, 0.999999) < 1.0);
}

TEST_CASE("ergodic rate endpoints and ordering") {
  SystemParams p = stock();
  CHECK(ergodic_ps_exact(p, 0.0) == 0.0);
  CHECK(ergodic_ps_exact(p, 1.0) == 0.0);
  CHECK(ergodic_ps_approx(p, 0.0) == 0.0);
  const double exact = ergodic_ps_exact(p, 0.5);
  const double approx = ergodic_ps_approx(p, 0.5);
  CHECK(exact >= 0.0);
  CHECK(approx >= exact - 1e-6);
  CHECK(std::abs(approx - exact) <= 0.01 * approx);
}

TEST_CASE("ergodic rate matches the simulated mean rate") {
  SystemParams p = stock();
  McConfig cfg;
  cfg.seed = 45;
  const McEstimate mc = estimate_metrics(p, PolicyParam::ps(0.5), cfg);
  const double analytic = ergodic_ps_exact(p, 0.5);
  CHECK(std::abs(analytic - mc.ergodic.mean) <= 2.0 * mc.ergodic.std_error);
}

TEST_CASE("rate lower bound sits below the high-SNR rate") {
  SystemParams p = stock();
  for (double beta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    CHECK(ergodic_ps_lower_bound(p, beta) <=
          ergodic_ps_approx(p, beta) + 1e-6);
  }
}

TEST_CASE("relay log-mean term: equal-ratio branch is the limit") {
  const double mx = 648.0;
  auto general = [&](double my) {
    const double ex = -exp_scaled_e1(1.0 / mx);
    const double ey = -exp_scaled_e1(1.0 / my);
    return mx / (mx - my) * (ey - ex);
  };
  const double equal = kernels::t2_relay_log_mean(mx, mx);
  CHECK(std::abs(general(mx * (1.0 + 1e-8)) - equal) <= 1e-6 * equal);
  CHECK(std::abs(general(mx * (1.0 - 1e-8)) - equal) <= 1e-6 * equal);
}

TEST_CASE("relay log-mean term equals the tail-CDF quadrature") {
  for (auto [mx, my] : {std::pair{648.0, 648.0}, {648.0, 200.0},
                        {30.0, 90.0}}) {
    auto integrand = [mx = mx, my = my](double u) {
      return mx / (mx + u * my) * std::exp(-u / mx) / (1.0 + u);
    };
    const double quad = oracles::simpson(integrand, 0.0, 60.0 * mx,
                                         2'000'000);
    CHECK(std::abs(kernels::t2_relay_log_mean(mx, my) - quad) <= 1e-6);
  }
}

TEST_CASE("destination log bound respects the convexity direction") {
  const double mx = 648.0;
  const double mz = 0.00917;
  // E ln(1 + x*z/(z+1)) over independent exponentials, dense grid
  auto inner = [&](double z) {
    const double c = z / (z + 1.0);
    return oracles::simpson(
        [&](double x) {
          return std::log1p(c * x) * std::exp(-x / mx) / mx;
        },
        0.0, 50.0 * mx, 20000);
  };
  const double truth = oracles::simpson(
      [&](double z) { return inner(z) * std::exp(-z / mz) / mz; }, 0.0,
      50.0 * mz, 2000);
  CHECK(kernels::t1_dest_log_bound(mx, mz) <= truth + 1e-6);
}
