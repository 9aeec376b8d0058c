#include "ringswitch/planner.hpp"

#include <array>

#include "ringswitch/cost_model.hpp"

namespace ringswitch {

std::string_view to_string(PlanMode mode) {
  return mode == PlanMode::kRdSwitched ? "RDSwitched" : "RingFallback";
}

Plan Plan::ring(Collective collective) {
  Plan plan;
  plan.collective = collective;
  return plan;
}

Plan Plan::switched(Collective collective, std::optional<int> rs_threshold,
                    std::optional<int> ag_threshold) {
  Plan plan;
  plan.collective = collective;
  plan.mode = PlanMode::kRdSwitched;
  if (involves(collective, Phase::kReduceScatter)) plan.rs_threshold = rs_threshold;
  if (involves(collective, Phase::kAllGather)) plan.ag_threshold = ag_threshold;
  if (!plan.rs_threshold && !plan.ag_threshold) plan.mode = PlanMode::kRingFallback;
  return plan;
}

std::optional<int> Plan::threshold(Phase phase) const {
  if (mode != PlanMode::kRdSwitched) return std::nullopt;
  return phase == Phase::kReduceScatter ? rs_threshold : ag_threshold;
}

std::optional<int> find_threshold(const CostParams& p, Phase phase,
                                  AllGatherModel model) {
  const int steps = require_recursive_doubling(p);
  const double ring = ring_total_cost(p).total_ns;
  for (int t = 0; t <= steps; ++t) {
    if (switched_phase_cost(phase, t, p, model).total_ns <= ring) return t;
  }
  return std::nullopt;
}

ThresholdChoice best_threshold(const CostParams& p, Phase phase,
                               AllGatherModel model) {
  const int steps = require_recursive_doubling(p);
  ThresholdChoice best{0, switched_phase_cost(phase, 0, p, model).total_ns};
  for (int t = 1; t <= steps; ++t) {
    const double cost = switched_phase_cost(phase, t, p, model).total_ns;
    if (cost <= best.total_ns) best = {t, cost};
  }
  return best;
}

Plan plan_collective(const CostParams& p, Collective collective,
                     SelectionRule rule, AllGatherModel model) {
  p.validate();
  const double ring_phase = ring_total_cost(p).total_ns;

  Plan plan = Plan::ring(collective);
  const std::array phases{Phase::kReduceScatter, Phase::kAllGather};

  if (!is_power_of_two(p.nodes)) {
    for (Phase phase : phases) {
      if (involves(collective, phase)) plan.predicted_total_ns += ring_phase;
    }
    plan.ring_baseline_ns = plan.predicted_total_ns;
    plan.warnings.push_back("n=" + std::to_string(p.nodes) +
                            " is not a power of two; recursive doubling "
                            "unavailable, using Ring");
    return plan;
  }

  for (Phase phase : phases) {
    if (!involves(collective, phase)) continue;
    plan.ring_baseline_ns += ring_phase;

    std::optional<ThresholdChoice> choice;
    if (rule == SelectionRule::kSmallestSatisfying) {
      if (auto t = find_threshold(p, phase, model)) {
        choice = ThresholdChoice{*t, switched_phase_cost(phase, *t, p, model).total_ns};
      }
    } else {
      ThresholdChoice best = best_threshold(p, phase, model);
      if (best.total_ns <= ring_phase) choice = best;
    }

    if (choice) {
      plan.mode = PlanMode::kRdSwitched;
      (phase == Phase::kReduceScatter ? plan.rs_threshold : plan.ag_threshold) =
          choice->threshold;
      plan.predicted_total_ns += choice->total_ns;
    } else {
      plan.predicted_total_ns += ring_phase;
    }
  }
  return plan;
}

}  // namespace ringswitch
