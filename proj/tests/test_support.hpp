#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "ringswitch/cost_params.hpp"
#include "reference_model.hpp"

namespace ringswitch::testing {

// n=4, alpha=1, alpha_s=0, full-message transmission 4 (4 bytes at 8 Gbit/s).
inline CostParams p1(double delta_ns = 0.0) {
  return CostParams{4, 4, 1.0, 0.0, 8.0, delta_ns};
}

// n=32, alpha=1 us, delta=100 ns, 32 B at 800 Gbit/s.
inline CostParams latency_case() {
  return CostParams{32, 32, 1000.0, 0.0, 800.0, 100.0};
}

inline RefParams to_ref(const CostParams& p) {
  return RefParams{p.nodes, static_cast<long double>(p.message_bytes), p.alpha_ns,
                   p.alpha_s_ns, p.bandwidth_gbps, p.delta_ns};
}

inline bool rel_close(double actual, long double expected, double tol = 1e-9) {
  const long double scale = std::max<long double>(std::fabs(expected), 1e-300L);
  return std::fabs(static_cast<long double>(actual) - expected) / scale <= tol ||
         std::fabs(static_cast<long double>(actual) - expected) == 0.0L;
}

/// Log-uniform sample in [lo, hi].
inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

/// Random valid parameters with a power-of-two node count in [2, max_nodes].
inline CostParams random_params(std::mt19937_64& rng, int max_log_nodes = 10) {
  std::uniform_int_distribution<int> log_n(1, max_log_nodes);
  std::uniform_real_distribution<double> startup(0.0, 100.0);
  CostParams p;
  p.nodes = 1 << log_n(rng);
  p.message_bytes = static_cast<std::int64_t>(log_uniform(rng, 1.0, 1e9));
  p.alpha_ns = log_uniform(rng, 1.0, 1e4);
  p.alpha_s_ns = (rng() % 2 == 0) ? 0.0 : startup(rng);
  p.bandwidth_gbps = log_uniform(rng, 10.0, 2000.0);
  p.delta_ns = log_uniform(rng, 1.0, 1e5);
  return p;
}

}  // namespace ringswitch::testing
