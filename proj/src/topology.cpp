#include "ringswitch/topology.hpp"

#include <string>

#include "ringswitch/types.hpp"

namespace ringswitch {

Topology Topology::static_ring(int nodes) {
  if (nodes < 2) throw ParameterError("a ring needs at least 2 nodes");
  return Topology(TopologyKind::kStaticRing, nodes);
}

Topology Topology::matching(int nodes, const std::vector<std::pair<int, int>>& pairs) {
  if (nodes < 2 || nodes % 2 != 0) {
    throw ParameterError("a perfect matching needs an even node count >= 2");
  }
  Topology topology(TopologyKind::kMatching, nodes);
  topology.partner_.assign(static_cast<std::size_t>(nodes), -1);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
      throw ParameterError("invalid matching pair (" + std::to_string(a) + ", " +
                           std::to_string(b) + ")");
    }
    if (topology.partner_[a] != -1 || topology.partner_[b] != -1) {
      throw ParameterError("node matched twice in pair (" + std::to_string(a) +
                           ", " + std::to_string(b) + ")");
    }
    topology.partner_[a] = b;
    topology.partner_[b] = a;
  }
  for (int node = 0; node < nodes; ++node) {
    if (topology.partner_[node] == -1) {
      throw ParameterError("matching leaves node " + std::to_string(node) +
                           " uncovered");
    }
  }
  return topology;
}

int Topology::partner(int node) const {
  if (kind_ != TopologyKind::kMatching || node < 0 || node >= nodes_) return -1;
  return partner_[node];
}

std::vector<Link> Topology::links() const {
  std::vector<Link> out;
  if (kind_ == TopologyKind::kStaticRing) {
    out.reserve(2 * static_cast<std::size_t>(nodes_));
    for (int k = 0; k < nodes_; ++k) {
      out.push_back({k, (k + 1) % nodes_, Heading::kClockwise});
      out.push_back({k, (k + nodes_ - 1) % nodes_, Heading::kCounterClockwise});
    }
  } else {
    out.reserve(static_cast<std::size_t>(nodes_));
    for (int k = 0; k < nodes_; ++k) out.push_back({k, partner_[k], Heading::kCircuit});
  }
  return out;
}

}  // namespace ringswitch
