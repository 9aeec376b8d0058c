#pragma once

#include <vector>

#include "ringswitch/cost_params.hpp"
#include "ringswitch/types.hpp"

// Closed-form completion-time model for reduce-scatter / AllGather on a
// static ring, with and without per-step circuit switching.
//
// Notation used in comments: L = log2(n), tx = full-message transmission
// time m*8/b. Chunk sizes are real-valued fractions of m.

namespace ringswitch {

struct PhaseCost {
  std::vector<double> per_step_ns;
  double total_ns = 0.0;
};

/// Duration of static recursive-doubling step `step`:
/// alpha*2^i + alpha_s + tx/2 (the 2^i congestion cancels the halved chunk).
double rd_step_cost(int step, const CostParams& p);

/// Recursive doubling on the static ring for one phase.
PhaseCost rd_total_cost(const CostParams& p);

/// Ring algorithm for one phase (reduce-scatter and AllGather are identical).
PhaseCost ring_total_cost(const CostParams& p);

/// Reduce-scatter that stays on the static ring for steps i < threshold and
/// reconfigures before every step i >= threshold. threshold in [0, L];
/// threshold == L is the fully static schedule.
PhaseCost switched_rs_cost(int threshold, const CostParams& p);

/// AllGather that reconfigures before every step i < threshold and uses the
/// static ring afterwards. threshold in [0, L].
PhaseCost switched_ag_cost(
    int threshold, const CostParams& p,
    AllGatherModel model = AllGatherModel::kFullMessage);

/// Dispatches to switched_rs_cost / switched_ag_cost.
PhaseCost switched_phase_cost(
    Phase phase, int threshold, const CostParams& p,
    AllGatherModel model = AllGatherModel::kFullMessage);

/// Reduce-scatter followed by AllGather; no extra charge between phases.
double allreduce_cost(
    int rs_threshold, int ag_threshold, const CostParams& p,
    AllGatherModel model = AllGatherModel::kFullMessage);

}  // namespace ringswitch
