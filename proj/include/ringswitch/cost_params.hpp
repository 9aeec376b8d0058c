#pragma once

#include <cstdint>

#include "ringswitch/types.hpp"

namespace ringswitch {

/// Physical and workload parameters shared by the cost model, planner and
/// simulator. Times are nanoseconds, sizes bytes, bandwidth Gbit/s.
struct CostParams {
  int nodes = 2;
  std::int64_t message_bytes = 0;
  double alpha_ns = 0.0;        // per-link propagation delay
  double alpha_s_ns = 0.0;      // fixed startup latency per step
  double bandwidth_gbps = 1.0;  // per-link bandwidth
  double delta_ns = 0.0;        // circuit reconfiguration delay

  /// Transmission time of the whole message over one link.
  double message_tx_ns() const;

  /// Transmission time of `bytes` over one uncontended link.
  double tx_ns(double bytes) const;

  /// Throws ParameterError unless every field is in range.
  void validate() const;
};

bool is_power_of_two(std::int64_t value);

/// log2(n) for a power-of-two n; throws ParameterError otherwise.
int log2_exact(int n);

/// Validates `p` and additionally requires a power-of-two node count.
/// Returns log2(nodes).
int require_recursive_doubling(const CostParams& p);

}  // namespace ringswitch
