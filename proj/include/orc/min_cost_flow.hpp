#pragma once

#include <vector>

#include "orc/rational.hpp"

namespace orc {

// Exact successive-shortest-path min-cost flow over cpp_int capacities and
// costs. Deterministic: Dijkstra scans vertices in index order and breaks
// distance ties toward the lowest index, arcs are relaxed in insertion
// order.
//
// The node potentials maintained for reduced costs are exposed after
// solving; they are the linear-programming duals the transport layer turns
// into Kantorovich potentials. For every residual arc (u,v) the invariant
// cost + p(u) - p(v) >= 0 holds, with equality on arcs that carry flow and
// still have residual capacity (callers keep arcs below capacity by sizing
// them above the total supply).
class MinCostFlow {
 public:
  explicit MinCostFlow(int node_count);

  // Returns the forward-arc id; the paired reverse arc is id^1.
  int add_arc(int from, int to, const Int& capacity, const Int& cost);

  // Routes the given supplies (positive = source, negative = sink; must sum
  // to zero) and returns the total cost. Negative arc costs are allowed as
  // long as the network has no negative-cost cycle.
  Int route_supplies(const std::vector<Int>& supply);

  Int flow_on(int arc_id) const;
  // Node potential after route_supplies; integer because all costs are.
  const Int& potential(int node) const { return potential_[node]; }

 private:
  struct Arc {
    int to;
    Int residual;
    Int cost;
  };

  int source() const { return node_count_; }
  int sink() const { return node_count_ + 1; }
  void bellman_ford_init();
  // Shortest reduced-cost path source->sink; fills parent arcs. Returns
  // false when the sink is unreachable.
  bool dijkstra(std::vector<int>* parent_arc);

  int node_count_;
  std::vector<Arc> arcs_;
  std::vector<Int> initial_capacity_;
  std::vector<std::vector<int>> out_;
  std::vector<Int> potential_;
};

}  // namespace orc
