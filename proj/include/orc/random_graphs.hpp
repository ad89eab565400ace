#pragma once

#include <random>
#include <utility>
#include <vector>

#include "orc/graph.hpp"

namespace orc {

// Connected random graph on 2..max_vertices vertices: a random attachment
// tree plus each remaining pair independently with probability 1/4. Raw
// modulo on mt19937_64 keeps the sequence identical across platforms.
inline Graph random_connected_graph(std::mt19937_64& rng, int max_vertices) {
  const int n = 2 + static_cast<int>(rng() % (max_vertices - 1));
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng() % v), v);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() % 4 == 0) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace orc
