#include "relaysec/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "relaysec/policy_ps.hpp"
#include "relaysec/policy_ts.hpp"
#include "relaysec/shared_metrics.hpp"

namespace relaysec {

namespace {

// Draws are grouped in fixed-size blocks; block partials are combined in
// block order, so the result does not depend on how blocks are scheduled
// across threads.
constexpr std::uint64_t kBlockSize = 1u << 16;

inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + i * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline double unit_from_bits(std::uint64_t r) {
  return (static_cast<double>(r >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
}

inline void kahan_add(double& sum, double& carry, double v) {
  const double y = v - carry;
  const double t = sum + y;
  carry = (t - sum) - y;
  sum = t;
}

struct BlockTotals {
  std::uint64_t active = 0;
  std::uint64_t outage = 0;  // over all draws in the block
  std::uint64_t pos = 0;
  double rate = 0.0, rate_c = 0.0;
  double rate2 = 0.0, rate2_c = 0.0;
};

BlockTotals run_block(const SystemParams& p, const PolicyParam& pol,
                      SnrMode mode, std::uint64_t seed, std::uint64_t first,
                      std::uint64_t count) {
  BlockTotals t;
  const bool exact = mode == SnrMode::exact;
  const double time_factor =
      pol.kind == Policy::ps ? 0.5 : 0.5 * (1.0 - pol.value);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t draw = first + i;
    const double u1 = unit_from_bits(splitmix64_at(seed, 2 * draw));
    const double u2 = unit_from_bits(splitmix64_at(seed, 2 * draw + 1));
    const ChannelSample s{-p.lambda_sr * std::log(u1),
                          -p.lambda_rd * std::log(u2)};
    const double received = p.p_s * s.g_sr + p.p_d * s.g_rd;
    if (received < p.theta_h) {
      ++t.outage;  // harvester never activates
      continue;
    }
    ++t.active;
    double gd, gr;
    if (pol.kind == Policy::ps) {
      gr = snr_relay_ps(p, pol.value, s);
      gd = exact ? snr_dest_ps_exact(p, pol.value, s)
                 : snr_dest_ps_approx(p, pol.value, s);
    } else {
      gr = snr_relay_ts(p, s);
      gd = exact ? snr_dest_ts_exact(p, pol.value, s)
                 : snr_dest_ts_approx(p, pol.value, s);
    }
    const double rate =
        time_factor > 0.0 ? secrecy_rate(gd, gr, time_factor) : 0.0;
    if (rate < p.r_th) ++t.outage;
    if (gd > gr) ++t.pos;
    kahan_add(t.rate, t.rate_c, rate);
    kahan_add(t.rate2, t.rate2_c, rate * rate);
  }
  return t;
}

MeanSe binomial(std::uint64_t hits, std::uint64_t n) {
  const double m = static_cast<double>(hits) / static_cast<double>(n);
  return {m, std::sqrt(m * (1.0 - m) / static_cast<double>(n))};
}

McEstimate reduce_blocks(const std::vector<BlockTotals>& blocks,
                         std::uint64_t n) {
  std::uint64_t active = 0, outage = 0, pos = 0;
  double rate = 0.0, rate_c = 0.0, rate2 = 0.0, rate2_c = 0.0;
  for (const BlockTotals& b : blocks) {
    active += b.active;
    outage += b.outage;
    pos += b.pos;
    kahan_add(rate, rate_c, b.rate);
    kahan_add(rate2, rate2_c, b.rate2);
  }
  McEstimate e;
  e.n_samples = n;
  e.power_outage = binomial(n - active, n);
  e.secrecy_outage_total = binomial(outage, n);
  if (active > 0) {
    e.secrecy_outage_cond = binomial(outage - (n - active), active);
  } else {
    e.secrecy_outage_cond = {1.0, 0.0};  // outage is certain without power
  }
  e.prob_pos = binomial(pos, n);
  const double dn = static_cast<double>(n);
  const double mean = rate / dn;
  double var = rate2 / dn - mean * mean;
  if (var < 0.0) var = 0.0;
  if (n > 1) var *= dn / (dn - 1.0);
  e.ergodic = {mean, std::sqrt(var / dn)};
  return e;
}

std::vector<BlockTotals> make_blocks(std::uint64_t n) {
  const std::uint64_t n_blocks = (n + kBlockSize - 1) / kBlockSize;
  return std::vector<BlockTotals>(n_blocks);
}

void check_config(const SystemParams& p, const McConfig& cfg) {
  p.validate();
  if (cfg.n_samples < 1) {
    throw std::invalid_argument("n_samples: must be >= 1");
  }
}

}  // namespace

double CounterRng::next_unit() {
  return unit_from_bits(splitmix64_at(seed, counter++));
}

ChannelSample sample_channel(double lambda_sr, double lambda_rd,
                             CounterRng& rng) {
  if (!(lambda_sr > 0.0) || !(lambda_rd > 0.0)) {
    throw std::invalid_argument("sample_channel: means must be positive");
  }
  const double u1 = rng.next_unit();
  const double u2 = rng.next_unit();
  return {-lambda_sr * std::log(u1), -lambda_rd * std::log(u2)};
}

McEstimate estimate_metrics(const SystemParams& p, const PolicyParam& pol,
                            const McConfig& cfg) {
  check_config(p, cfg);
  const std::uint64_t n = cfg.n_samples;
  std::vector<BlockTotals> blocks = make_blocks(n);
  const std::int64_t n_blocks = static_cast<std::int64_t>(blocks.size());
#ifdef _OPENMP
  int threads = cfg.n_streams > 0 ? cfg.n_streams : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::int64_t b = 0; b < n_blocks; ++b) {
    const std::uint64_t first = static_cast<std::uint64_t>(b) * kBlockSize;
    const std::uint64_t count = std::min(kBlockSize, n - first);
    blocks[static_cast<std::size_t>(b)] =
        run_block(p, pol, cfg.snr_mode, cfg.seed, first, count);
  }
  return reduce_blocks(blocks, n);
}

McEstimate estimate_metrics_serial(const SystemParams& p,
                                   const PolicyParam& pol,
                                   const McConfig& cfg) {
  check_config(p, cfg);
  const std::uint64_t n = cfg.n_samples;
  std::vector<BlockTotals> blocks = make_blocks(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::uint64_t first = static_cast<std::uint64_t>(b) * kBlockSize;
    const std::uint64_t count = std::min(kBlockSize, n - first);
    blocks[b] = run_block(p, pol, cfg.snr_mode, cfg.seed, first, count);
  }
  return reduce_blocks(blocks, n);
}

}  // namespace relaysec
