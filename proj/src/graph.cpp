#include "orc/graph.hpp"

#include <algorithm>
#include <queue>

#include "orc/errors.hpp"

namespace orc {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) fail("IndexOutOfRange", "negative vertex count");
  adj_.assign(vertex_count, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      fail("IndexOutOfRange", "edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") with n=" +
                                  std::to_string(vertex_count));
    }
    if (u == v) fail("SelfLoop", "self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    fail("IndexOutOfRange", "vertex " + std::to_string(v) + " with n=" +
                                std::to_string(vertex_count()));
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adj_) twice += nbrs.size();
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;  // already lexicographic: u ascending, adj_ sorted
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count()) {
    fail("IndexOutOfRange", "label count " + std::to_string(labels.size()) +
                                " does not match n=" +
                                std::to_string(vertex_count()));
  }
  labels_ = std::move(labels);
}

std::optional<int> Graph::vertex_by_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix m;
  m.n_ = g.vertex_count();
  m.d_.assign(static_cast<std::size_t>(m.n_) * m.n_, DistanceMatrix::kUnreachable);
  std::vector<int> dist;
  for (int s = 0; s < m.n_; ++s) {
    dist.assign(m.n_, DistanceMatrix::kUnreachable);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (dist[w] == DistanceMatrix::kUnreachable) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    std::copy(dist.begin(), dist.end(),
              m.d_.begin() + static_cast<std::size_t>(s) * m.n_);
  }
  return m;
}

int DistanceMatrix::eccentricity(int v) const {
  int ecc = 0;
  for (int u = 0; u < n_; ++u) {
    ecc = std::max(ecc, (*this)(v, u));
  }
  return ecc;
}

void validate_graph(const Graph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    const auto& nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const int w = nbrs[i];
      if (w < 0 || w >= n) fail("IndexOutOfRange", "stored neighbor out of range");
      if (w == v) fail("SelfLoop", "stored self-loop at " + std::to_string(v));
      if (i > 0 && nbrs[i - 1] >= w)
        fail("IndexOutOfRange", "adjacency not sorted/unique at " + std::to_string(v));
      if (!g.has_edge(w, v))
        fail("IndexOutOfRange", "asymmetric adjacency at (" + std::to_string(v) +
                                    "," + std::to_string(w) + ")");
    }
  }
  if (!g.labels().empty() && static_cast<int>(g.labels().size()) != n)
    fail("IndexOutOfRange", "label vector size mismatch");
}

}  // namespace orc
