#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orc {

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
// sorted and duplicate-free; there are no self-loops. Vertices may carry
// optional string labels (used by the marked generators and the CLI).
class Graph {
 public:
  Graph() = default;
  // Accepts edges in either orientation, deduplicates. Throws
  // Error("IndexOutOfRange") / Error("SelfLoop") on bad input.
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  std::size_t edge_count() const;
  bool has_edge(int u, int v) const;

  // Canonical edge enumeration: u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::optional<int> vertex_by_label(std::string_view label) const;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;  // empty or size n
};

inline Graph build_graph(int vertex_count,
                         const std::vector<std::pair<int, int>>& edges) {
  return Graph(vertex_count, edges);
}

// All-pairs shortest-path distances by BFS from every vertex.
// Unreachable pairs hold kUnreachable.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }
  int vertex_count() const { return n_; }
  // Largest finite distance from v.
  int eccentricity(int v) const;

 private:
  friend DistanceMatrix all_pairs_distances(const Graph& g);
  int n_ = 0;
  std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// A graph with two distinguished vertices, as produced by the marked
// generators.
struct MarkedPair {
  Graph graph;
  int x = 0;
  int y = 0;
};

// Re-checks the representation invariants (sorted symmetric adjacency, no
// loops or duplicates, label size). Throws Error on violation. Cheap enough
// to run inside property tests.
void validate_graph(const Graph& g);

}  // namespace orc
