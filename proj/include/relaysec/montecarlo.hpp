#pragma once

#include <cstdint>

#include "relaysec/types.hpp"

namespace relaysec {

enum class SnrMode { exact, high_snr_approx };

struct McConfig {
  std::uint64_t n_samples = 1'000'000;
  std::uint64_t seed = 0;
  SnrMode snr_mode = SnrMode::exact;
  int n_streams = 0;  // worker threads; 0 = available parallelism
};

// Counter-based uniform stream: value i is the i-th splitmix64 output from
// the given seed, so any draw can be generated independently of the others.
// Parallel partitioning therefore cannot change the stream.
struct CounterRng {
  std::uint64_t seed = 0;
  std::uint64_t counter = 0;

  double next_unit();  // uniform on (0, 1]
};

// Inverse-CDF exponential channel gains; a unit draw of exactly 1 maps to
// gain 0.
ChannelSample sample_channel(double lambda_sr, double lambda_rd,
                             CounterRng& rng);

// Seeded Monte Carlo over fading realizations. Per draw: activation test on
// the received power, then SNRs (exact or high-SNR approximate destination
// form), the per-draw secrecy rate, and indicator accumulation. Inactive
// draws count as secrecy outage and contribute zero rate.
//
// Results are bit-identical for fixed (seed, n_samples, snr_mode) regardless
// of n_streams: draws are processed in fixed-size blocks whose partial sums
// are combined in block order.
McEstimate estimate_metrics(const SystemParams& p, const PolicyParam& pol,
                            const McConfig& cfg);

// Serial reference path: same per-draw math and the same block reduction,
// no worker threads. Kept for testing and benchmarking against the parallel
// kernel; must agree bit for bit.
McEstimate estimate_metrics_serial(const SystemParams& p,
                                   const PolicyParam& pol,
                                   const McConfig& cfg);

}  // namespace relaysec
