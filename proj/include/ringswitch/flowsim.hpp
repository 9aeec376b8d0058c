#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "ringswitch/cost_params.hpp"
#include "ringswitch/planner.hpp"
#include "ringswitch/topology.hpp"
#include "ringswitch/types.hpp"

// Flow-level simulator for ring and recursive-doubling collectives.
//
// Each step is a set of concurrent point-to-point flows followed by a global
// barrier. A flow's rate is the link bandwidth divided by the number of flows
// on the busiest link of its path. Timing never consults the cost model, so
// the simulator can serve as an oracle for it.

namespace ringswitch {

enum class Algorithm { kRing, kRecursiveDoubling };

struct Flow {
  int src = 0;
  int dst = 0;
  double chunk_bytes = 0.0;
};

struct FlowSet {
  int step_index = 0;
  std::vector<Flow> flows;
  Topology required_topology = Topology::static_ring(2);
};

/// Flows of one step.
///  Ring: j -> j+1 with m/n bytes.
///  RD reduce-scatter step i: j <-> j^2^i with m/2^(i+1) bytes.
///  RD AllGather step i: j <-> j^2^(L-1-i) with m*2^i/n bytes.
FlowSet build_step_flows(Algorithm algorithm, Phase phase, int step, int nodes,
                         double message_bytes);

struct Routing {
  std::vector<std::vector<Link>> paths;  // parallel to FlowSet::flows
  std::map<Link, int> load;              // flows per directed link

  int max_load() const;
  /// Busiest link along the path of flow `index`.
  int path_load(std::size_t index) const;
};

/// Shortest-arc routing on a static ring. Diametric pairs (distance n/2)
/// send both directions clockwise, so each direction takes one of the two
/// complementary arcs. On a matching every flow uses its circuit.
Routing route_and_load(const FlowSet& flows, const Topology& topology);

struct StepRecord {
  Phase phase = Phase::kReduceScatter;
  int step_index = 0;
  bool switched = false;
  double reconfig_ns = 0.0;
  double propagation_ns = 0.0;
  double startup_ns = 0.0;
  double transmission_ns = 0.0;
  int max_link_load = 0;

  double duration_ns() const {
    return reconfig_ns + propagation_ns + startup_ns + transmission_ns;
  }
};

struct SimResult {
  std::vector<StepRecord> steps;
  double total_ns = 0.0;
};

/// Times one step: optional delta, alpha times the longest path, alpha_s, and
/// the slowest flow's contended transmission.
StepRecord simulate_step(const FlowSet& flows, const Topology& topology,
                         const CostParams& p, bool charge_reconfig);

/// Runs every phase of the plan with a barrier between consecutive steps.
SimResult simulate_collective(const Plan& plan, const CostParams& p);

/// One line per step:
/// step=<k> mode=<static|switched> reconfig_ns=<x> prop_ns=<x> tx_ns=<x> maxload=<k>
/// Steps are numbered consecutively across phases.
void write_timeline(std::ostream& out, const SimResult& result);

}  // namespace ringswitch
