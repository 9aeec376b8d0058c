#include "ringswitch/flowsim.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace ringswitch {

namespace {

void validate_flows(const FlowSet& set, const Topology& topology) {
  const int n = topology.nodes();
  for (const Flow& flow : set.flows) {
    if (flow.src < 0 || flow.dst < 0 || flow.src >= n || flow.dst >= n) {
      throw ParameterError("flow " + std::to_string(flow.src) + "->" +
                           std::to_string(flow.dst) + " has an endpoint outside [0, " +
                           std::to_string(n) + ")");
    }
    if (flow.src == flow.dst) {
      throw ParameterError("flow from node " + std::to_string(flow.src) + " to itself");
    }
    if (!(flow.chunk_bytes >= 0.0)) {
      throw ParameterError("flow chunk size must be >= 0");
    }
  }
}

std::vector<Link> ring_path(int src, int dst, int n) {
  const int clockwise = (dst - src + n) % n;
  const int counter = n - clockwise;
  // Diametric ties go clockwise in both directions (complementary arcs).
  const bool go_clockwise = clockwise <= counter;

  std::vector<Link> path;
  path.reserve(static_cast<std::size_t>(std::min(clockwise, counter)));
  int at = src;
  while (at != dst) {
    const int next = go_clockwise ? (at + 1) % n : (at + n - 1) % n;
    path.push_back({at, next, go_clockwise ? Heading::kClockwise
                                           : Heading::kCounterClockwise});
    at = next;
  }
  return path;
}

}  // namespace

int Routing::max_load() const {
  int best = 0;
  for (const auto& [link, count] : load) best = std::max(best, count);
  return best;
}

int Routing::path_load(std::size_t index) const {
  int best = 0;
  for (const Link& link : paths.at(index)) best = std::max(best, load.at(link));
  return best;
}

Routing route_and_load(const FlowSet& set, const Topology& topology) {
  validate_flows(set, topology);
  Routing routing;
  routing.paths.reserve(set.flows.size());
  for (const Flow& flow : set.flows) {
    if (topology.kind() == TopologyKind::kStaticRing) {
      routing.paths.push_back(ring_path(flow.src, flow.dst, topology.nodes()));
    } else {
      if (topology.partner(flow.src) != flow.dst) {
        throw ParameterError("flow " + std::to_string(flow.src) + "->" +
                             std::to_string(flow.dst) +
                             " has no circuit in the current matching");
      }
      routing.paths.push_back({Link{flow.src, flow.dst, Heading::kCircuit}});
    }
    for (const Link& link : routing.paths.back()) ++routing.load[link];
  }
  return routing;
}

StepRecord simulate_step(const FlowSet& set, const Topology& topology,
                         const CostParams& p, bool charge_reconfig) {
  p.validate();
  if (topology.nodes() != p.nodes) {
    throw ParameterError("topology has " + std::to_string(topology.nodes()) +
                         " nodes but parameters have " + std::to_string(p.nodes));
  }
  const Routing routing = route_and_load(set, topology);

  StepRecord record;
  record.step_index = set.step_index;
  record.switched = charge_reconfig;
  record.reconfig_ns = charge_reconfig ? p.delta_ns : 0.0;
  record.startup_ns = p.alpha_s_ns;
  record.max_link_load = routing.max_load();

  std::size_t max_hops = 0;
  for (std::size_t f = 0; f < set.flows.size(); ++f) {
    max_hops = std::max(max_hops, routing.paths[f].size());
    const double finish =
        p.tx_ns(set.flows[f].chunk_bytes) * routing.path_load(f);
    record.transmission_ns = std::max(record.transmission_ns, finish);
  }
  record.propagation_ns = p.alpha_ns * static_cast<double>(max_hops);
  return record;
}

SimResult simulate_collective(const Plan& plan, const CostParams& p) {
  p.validate();
  SimResult result;
  const Topology ring = Topology::static_ring(p.nodes);

  for (Phase phase : {Phase::kReduceScatter, Phase::kAllGather}) {
    if (!involves(plan.collective, phase)) continue;

    if (const auto threshold = plan.threshold(phase)) {
      const int steps = require_recursive_doubling(p);
      if (*threshold < 0 || *threshold > steps) {
        throw ParameterError("threshold " + std::to_string(*threshold) +
                             " outside [0, " + std::to_string(steps) + "]");
      }
      for (int i = 0; i < steps; ++i) {
        const FlowSet set = build_step_flows(Algorithm::kRecursiveDoubling, phase, i,
                                             p.nodes, static_cast<double>(p.message_bytes));
        const bool switched =
            phase == Phase::kReduceScatter ? i >= *threshold : i < *threshold;
        StepRecord record = simulate_step(
            set, switched ? set.required_topology : ring, p, switched);
        record.phase = phase;
        result.steps.push_back(record);
      }
    } else {
      for (int i = 0; i + 1 < p.nodes; ++i) {
        const FlowSet set = build_step_flows(Algorithm::kRing, phase, i, p.nodes,
                                             static_cast<double>(p.message_bytes));
        StepRecord record = simulate_step(set, ring, p, false);
        record.phase = phase;
        result.steps.push_back(record);
      }
    }
  }

  for (const StepRecord& step : result.steps) result.total_ns += step.duration_ns();
  return result;
}

void write_timeline(std::ostream& out, const SimResult& result) {
  for (std::size_t k = 0; k < result.steps.size(); ++k) {
    const StepRecord& s = result.steps[k];
    fmt::print(out, "step={} mode={} reconfig_ns={} prop_ns={} tx_ns={} maxload={}\n",
               k, s.switched ? "switched" : "static", s.reconfig_ns,
               s.propagation_ns, s.transmission_ns, s.max_link_load);
  }
}

}  // namespace ringswitch
