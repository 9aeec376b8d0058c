#include "ringswitch/cost_params.hpp"

#include <cmath>
#include <string>

namespace ringswitch {

namespace {

void require_finite_nonnegative(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ParameterError(std::string(name) + " must be finite and >= 0, got " +
                         std::to_string(value));
  }
}

}  // namespace

double CostParams::message_tx_ns() const {
  return tx_ns(static_cast<double>(message_bytes));
}

double CostParams::tx_ns(double bytes) const {
  return bytes * 8.0 / bandwidth_gbps;
}

void CostParams::validate() const {
  if (nodes < 2) {
    throw ParameterError("n must be >= 2, got " + std::to_string(nodes));
  }
  if (message_bytes < 0) {
    throw ParameterError("message size must be >= 0 bytes");
  }
  require_finite_nonnegative(alpha_ns, "alpha_ns");
  require_finite_nonnegative(alpha_s_ns, "alpha_s_ns");
  require_finite_nonnegative(delta_ns, "delta_ns");
  if (!std::isfinite(bandwidth_gbps) || bandwidth_gbps <= 0.0) {
    throw ParameterError("bandwidth_gbps must be finite and > 0");
  }
  if (!std::isfinite(message_tx_ns())) {
    throw ParameterError("message transmission time is not finite");
  }
}

bool is_power_of_two(std::int64_t value) {
  return value > 0 && (value & (value - 1)) == 0;
}

int log2_exact(int n) {
  if (!is_power_of_two(n)) {
    throw ParameterError("n must be a power of two for recursive doubling, got " +
                         std::to_string(n));
  }
  int log = 0;
  while ((1 << log) < n) ++log;
  return log;
}

int require_recursive_doubling(const CostParams& p) {
  p.validate();
  return log2_exact(p.nodes);
}

}  // namespace ringswitch
