#include "ringswitch/cost_model.hpp"

#include <cmath>
#include <string>

namespace ringswitch {

namespace {

void require_threshold(int threshold, int steps) {
  if (threshold < 0 || threshold > steps) {
    throw ParameterError("threshold " + std::to_string(threshold) +
                         " outside [0, " + std::to_string(steps) + "]");
  }
}

// Steps 0..count-1 of static recursive doubling, summed in closed form:
// alpha*(2^count - 1) + alpha_s*count + tx*count/2.
// The fully static total and the mirrored AllGather suffix both reuse this so
// that boundary identities hold bit-for-bit.
double static_rd_prefix_ns(int count, const CostParams& p) {
  return p.alpha_ns * (std::ldexp(1.0, count) - 1.0) +
         p.alpha_s_ns * count + p.message_tx_ns() * count / 2.0;
}

// One switched step: a single hop on a dedicated circuit.
double switched_step_ns(double chunk_tx_ns, const CostParams& p) {
  return p.alpha_ns + p.alpha_s_ns + p.delta_ns + chunk_tx_ns;
}

}  // namespace

double rd_step_cost(int step, const CostParams& p) {
  const int steps = require_recursive_doubling(p);
  if (step < 0 || step >= steps) {
    throw ParameterError("step " + std::to_string(step) + " outside [0, " +
                         std::to_string(steps) + ")");
  }
  return std::ldexp(p.alpha_ns, step) + p.alpha_s_ns + p.message_tx_ns() / 2.0;
}

PhaseCost rd_total_cost(const CostParams& p) {
  const int steps = require_recursive_doubling(p);
  PhaseCost cost;
  cost.per_step_ns.reserve(steps);
  for (int i = 0; i < steps; ++i) cost.per_step_ns.push_back(rd_step_cost(i, p));
  cost.total_ns = static_rd_prefix_ns(steps, p);
  return cost;
}

PhaseCost ring_total_cost(const CostParams& p) {
  p.validate();
  const int n = p.nodes;
  const double step = p.alpha_ns + p.alpha_s_ns + p.message_tx_ns() / n;
  PhaseCost cost;
  cost.per_step_ns.assign(static_cast<std::size_t>(n - 1), step);
  cost.total_ns = (p.alpha_ns + p.alpha_s_ns) * (n - 1) +
                  p.message_tx_ns() * (n - 1) / n;
  return cost;
}

PhaseCost switched_rs_cost(int threshold, const CostParams& p) {
  const int steps = require_recursive_doubling(p);
  require_threshold(threshold, steps);
  const double tx = p.message_tx_ns();

  PhaseCost cost;
  cost.per_step_ns.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    if (i < threshold) {
      cost.per_step_ns.push_back(rd_step_cost(i, p));
    } else {
      cost.per_step_ns.push_back(switched_step_ns(std::ldexp(tx, -(i + 1)), p));
    }
  }
  // Switched suffix: (L-T)*(alpha+alpha_s+delta) + tx*(2^-T - 2^-L).
  const double switched =
      (steps - threshold) * (p.alpha_ns + p.alpha_s_ns + p.delta_ns) +
      tx * (std::ldexp(1.0, -threshold) - std::ldexp(1.0, -steps));
  cost.total_ns = static_rd_prefix_ns(threshold, p) + switched;
  return cost;
}

PhaseCost switched_ag_cost(int threshold, const CostParams& p,
                           AllGatherModel model) {
  const int steps = require_recursive_doubling(p);
  require_threshold(threshold, steps);
  const int n = p.nodes;
  const double tx = p.message_tx_ns();

  PhaseCost cost;
  cost.per_step_ns.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double chunk_tx = std::ldexp(tx, i) / n;  // chunk m*2^i/n
    if (i < threshold) {
      cost.per_step_ns.push_back(switched_step_ns(chunk_tx, p));
    } else if (model == AllGatherModel::kFullMessage) {
      cost.per_step_ns.push_back(std::ldexp(p.alpha_ns, i) + p.alpha_s_ns +
                                 std::ldexp(chunk_tx, steps - i));
    } else {
      const int hops_log = steps - 1 - i;
      cost.per_step_ns.push_back(std::ldexp(p.alpha_ns, hops_log) +
                                 p.alpha_s_ns + std::ldexp(chunk_tx, hops_log));
    }
  }

  const double switched =
      threshold * (p.alpha_ns + p.alpha_s_ns + p.delta_ns) +
      tx * (std::ldexp(1.0, threshold) - 1.0) / n;
  const int static_steps = steps - threshold;
  double static_part = 0.0;
  if (model == AllGatherModel::kFullMessage) {
    // Every static step moves exactly tx: (m*2^i/n) * 2^(L-i) = m.
    static_part = p.alpha_ns * (std::ldexp(1.0, steps) - std::ldexp(1.0, threshold)) +
                  p.alpha_s_ns * static_steps + tx * static_steps;
  } else {
    static_part = static_rd_prefix_ns(static_steps, p);
  }
  cost.total_ns = switched + static_part;
  return cost;
}

PhaseCost switched_phase_cost(Phase phase, int threshold, const CostParams& p,
                              AllGatherModel model) {
  return phase == Phase::kReduceScatter ? switched_rs_cost(threshold, p)
                                        : switched_ag_cost(threshold, p, model);
}

double allreduce_cost(int rs_threshold, int ag_threshold, const CostParams& p,
                      AllGatherModel model) {
  return switched_rs_cost(rs_threshold, p).total_ns +
         switched_ag_cost(ag_threshold, p, model).total_ns;
}

}  // namespace ringswitch
