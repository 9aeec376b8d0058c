#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace ringswitch {

enum class TopologyKind { kStaticRing, kMatching };

enum class Heading { kClockwise, kCounterClockwise, kCircuit };

/// One directed link. On a ring `heading` distinguishes the two directions,
/// which matters for n = 2 where both neighbours are the same node.
struct Link {
  int from = 0;
  int to = 0;
  Heading heading = Heading::kClockwise;

  auto operator<=>(const Link&) const = default;
};

/// Physical interconnect for one step. Rank j sits at ring position j.
///
/// A static ring has 2n directed links (clockwise and counter-clockwise
/// between neighbours). A matching pairs every node with exactly one partner
/// over a dedicated bidirectional circuit.
class Topology {
 public:
  static Topology static_ring(int nodes);
  static Topology matching(int nodes, const std::vector<std::pair<int, int>>& pairs);

  TopologyKind kind() const { return kind_; }
  int nodes() const { return nodes_; }

  /// Partner of `node` under a matching; -1 on a static ring.
  int partner(int node) const;

  std::vector<Link> links() const;

  bool operator==(const Topology&) const = default;

 private:
  Topology(TopologyKind kind, int nodes) : kind_(kind), nodes_(nodes) {}

  TopologyKind kind_;
  int nodes_;
  std::vector<int> partner_;
};

}  // namespace ringswitch
