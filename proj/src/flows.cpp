#include "ringswitch/flowsim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ringswitch {

FlowSet build_step_flows(Algorithm algorithm, Phase phase, int step, int nodes,
                         double message_bytes) {
  if (nodes < 2) throw ParameterError("n must be >= 2");
  if (!std::isfinite(message_bytes) || message_bytes < 0.0) {
    throw ParameterError("message size must be finite and >= 0");
  }

  FlowSet set;
  set.step_index = step;

  if (algorithm == Algorithm::kRing) {
    if (step < 0 || step > nodes - 2) {
      throw ParameterError("ring step " + std::to_string(step) + " outside [0, " +
                           std::to_string(nodes - 2) + "]");
    }
    const double chunk = message_bytes / nodes;
    set.flows.reserve(static_cast<std::size_t>(nodes));
    for (int j = 0; j < nodes; ++j) set.flows.push_back({j, (j + 1) % nodes, chunk});
    set.required_topology = Topology::static_ring(nodes);
    return set;
  }

  const int steps = log2_exact(nodes);
  if (step < 0 || step >= steps) {
    throw ParameterError("recursive doubling step " + std::to_string(step) +
                         " outside [0, " + std::to_string(steps) + ")");
  }

  int distance = 0;
  double chunk = 0.0;
  if (phase == Phase::kReduceScatter) {
    distance = 1 << step;
    chunk = std::ldexp(message_bytes, -(step + 1));
  } else {
    distance = 1 << (steps - 1 - step);
    chunk = std::ldexp(message_bytes, step) / nodes;
  }

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(nodes / 2));
  set.flows.reserve(static_cast<std::size_t>(nodes));
  for (int j = 0; j < nodes; ++j) {
    const int partner = j ^ distance;
    set.flows.push_back({j, partner, chunk});
    if (j < partner) pairs.emplace_back(j, partner);
  }
  set.required_topology = Topology::matching(nodes, pairs);
  return set;
}

}  // namespace ringswitch
