#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringswitch/cost_params.hpp"
#include "ringswitch/types.hpp"

namespace ringswitch {

enum class PlanMode { kRingFallback, kRdSwitched };

std::string_view to_string(PlanMode mode);

/// Chosen execution strategy for one collective.
///
/// Under kRdSwitched a phase runs recursive doubling with its threshold when
/// the threshold is set, and runs the Ring algorithm when it is not (an
/// AllReduce may fall back one phase at a time). Under kRingFallback both
/// thresholds are empty.
struct Plan {
  Collective collective = Collective::kReduceScatter;
  PlanMode mode = PlanMode::kRingFallback;
  std::optional<int> rs_threshold;
  std::optional<int> ag_threshold;
  double predicted_total_ns = 0.0;
  double ring_baseline_ns = 0.0;
  std::vector<std::string> warnings;

  static Plan ring(Collective collective);
  static Plan switched(Collective collective, std::optional<int> rs_threshold,
                       std::optional<int> ag_threshold);

  std::optional<int> threshold(Phase phase) const;
};

struct ThresholdChoice {
  int threshold = 0;
  double total_ns = 0.0;
};

/// Smallest threshold whose switched-phase cost does not exceed the Ring
/// phase cost, or nullopt if none does.
std::optional<int> find_threshold(
    const CostParams& p, Phase phase,
    AllGatherModel model = AllGatherModel::kFullMessage);

/// Threshold minimising the switched-phase cost. Ties go to the larger
/// threshold (fewer reconfigurations).
ThresholdChoice best_threshold(
    const CostParams& p, Phase phase,
    AllGatherModel model = AllGatherModel::kFullMessage);

/// Plans every phase of `collective` independently. Never predicts more
/// than the Ring baseline. A node count that is not a power of two yields
/// RingFallback plus a warning.
Plan plan_collective(const CostParams& p, Collective collective,
                     SelectionRule rule = SelectionRule::kArgmin,
                     AllGatherModel model = AllGatherModel::kFullMessage);

}  // namespace ringswitch
