#include "orc/min_cost_flow.hpp"

#include <algorithm>
#include <stdexcept>

namespace orc {

MinCostFlow::MinCostFlow(int node_count)
    : node_count_(node_count), out_(node_count + 2) {}

int MinCostFlow::add_arc(int from, int to, const Int& capacity, const Int& cost) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back(Arc{to, capacity, cost});
  arcs_.push_back(Arc{from, 0, -cost});
  initial_capacity_.push_back(capacity);
  initial_capacity_.push_back(0);
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

void MinCostFlow::bellman_ford_init() {
  // Only needed when some arc cost is negative; distances stay finite on
  // everything reachable from the source and the relaxation settles within
  // node_count_+2 passes unless a negative cycle exists.
  const int n = node_count_ + 2;
  std::vector<char> seen(n, 0);
  std::vector<Int> dist(n, 0);
  seen[source()] = 1;
  for (int pass = 0; pass <= n; ++pass) {
    bool changed = false;
    for (int u = 0; u < n; ++u) {
      if (!seen[u]) continue;
      for (int id : out_[u]) {
        const Arc& a = arcs_[id];
        if (a.residual == 0) continue;
        const Int cand = dist[u] + a.cost;
        if (!seen[a.to] || cand < dist[a.to]) {
          seen[a.to] = 1;
          dist[a.to] = cand;
          changed = true;
        }
      }
    }
    if (!changed) {
      for (int v = 0; v < n; ++v) {
        if (seen[v]) potential_[v] = dist[v];
      }
      return;
    }
  }
  throw std::logic_error("negative-cost cycle in flow network");
}

bool MinCostFlow::dijkstra(std::vector<int>* parent_arc) {
  const int n = node_count_ + 2;
  std::vector<Int> dist(n, 0);
  std::vector<char> reached(n, 0), done(n, 0);
  parent_arc->assign(n, -1);
  reached[source()] = 1;
  for (;;) {
    int u = -1;
    for (int v = 0; v < n; ++v) {  // lowest index wins distance ties
      if (!reached[v] || done[v]) continue;
      if (u == -1 || dist[v] < dist[u]) u = v;
    }
    if (u == -1) break;
    done[u] = 1;
    for (int id : out_[u]) {
      const Arc& a = arcs_[id];
      if (a.residual == 0) continue;
      const Int cand = dist[u] + a.cost + potential_[u] - potential_[a.to];
      if (!reached[a.to] || cand < dist[a.to]) {
        reached[a.to] = 1;
        dist[a.to] = cand;
        (*parent_arc)[a.to] = id;
      }
    }
  }
  if (!reached[sink()]) return false;
  for (int v = 0; v < n; ++v) {
    if (reached[v]) potential_[v] += std::min(dist[v], dist[sink()]);
  }
  return true;
}

Int MinCostFlow::route_supplies(const std::vector<Int>& supply) {
  if (static_cast<int>(supply.size()) != node_count_)
    throw std::logic_error("supply vector size mismatch");
  Int total = 0;
  for (const Int& s : supply) total += s;
  if (total != 0) throw std::logic_error("supplies must sum to zero");

  Int remaining = 0;
  for (int v = 0; v < node_count_; ++v) {
    if (supply[v] > 0) {
      add_arc(source(), v, supply[v], 0);
      remaining += supply[v];
    } else if (supply[v] < 0) {
      add_arc(v, sink(), -supply[v], 0);
    }
  }

  potential_.assign(node_count_ + 2, 0);
  if (std::any_of(arcs_.begin(), arcs_.end(),
                  [](const Arc& a) { return a.residual > 0 && a.cost < 0; })) {
    bellman_ford_init();
  }

  std::vector<int> parent_arc;
  while (remaining > 0) {
    if (!dijkstra(&parent_arc))
      throw std::logic_error("flow network cannot route all supply");
    Int push = remaining;
    for (int v = sink(); v != source();) {
      const Arc& a = arcs_[parent_arc[v]];
      push = std::min(push, a.residual);
      v = arcs_[parent_arc[v] ^ 1].to;
    }
    for (int v = sink(); v != source();) {
      arcs_[parent_arc[v]].residual -= push;
      arcs_[parent_arc[v] ^ 1].residual += push;
      v = arcs_[parent_arc[v] ^ 1].to;
    }
    remaining -= push;
  }

  Int cost = 0;
  for (std::size_t id = 0; id < arcs_.size(); id += 2) {
    cost += flow_on(static_cast<int>(id)) * arcs_[id].cost;
  }
  return cost;
}

Int MinCostFlow::flow_on(int arc_id) const {
  return initial_capacity_[arc_id] - arcs_[arc_id].residual;
}

}  // namespace orc
