#include "orc/generators.hpp"

#include <string>
#include <utility>
#include <vector>

#include "orc/errors.hpp"

namespace orc {

BasicKind parse_basic_kind(std::string_view name) {
  if (name == "path") return BasicKind::kPath;
  if (name == "cycle") return BasicKind::kCycle;
  if (name == "complete") return BasicKind::kComplete;
  if (name == "star") return BasicKind::kStar;
  fail("ParseError", "unknown graph kind '" + std::string(name) + "'");
}

Graph gen_basic(BasicKind kind, int n) {
  const int min_n = (kind == BasicKind::kCycle) ? 3 : 1;
  if (n < min_n) {
    fail("TooSmall", "need at least " + std::to_string(min_n) +
                         " vertices, got " + std::to_string(n));
  }
  std::vector<std::pair<int, int>> edges;
  switch (kind) {
    case BasicKind::kPath:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case BasicKind::kCycle:
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case BasicKind::kComplete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case BasicKind::kStar:
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
  }
  return Graph(n, edges);
}

MarkedPair gen_figure3_graph() {
  // Path x-w-y with two extra leaves on y; indices x=0, w=1, y=2, z1=3, z2=4.
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  g.set_labels({"x", "w", "y", "z1", "z2"});
  return MarkedPair{std::move(g), 0, 1};
}

MarkedPair gen_family(int m, int n, int k) {
  if (m < 0 || n < 0 || k < 0)
    fail("IndexOutOfRange", "family parameters must be nonnegative");
  if (m == 0 && n == 0 && k == 0)
    fail("DegenerateFamily", "family needs m+n+k >= 1");

  const int x = 0, y = 1, x0 = 2, x1 = 3, y0 = 4, y1 = 5;
  std::vector<std::pair<int, int>> edges = {
      {x, x0}, {x0, y0}, {y0, y}, {x, x1}, {x1, y1}, {y1, y}};
  std::vector<std::string> labels(6 + 4 * m + 3 * n + 2 * k);
  labels[x] = "x";
  labels[y] = "y";
  labels[x0] = "x0";
  labels[x1] = "x1";
  labels[y0] = "y0";
  labels[y1] = "y1";

  int next = 6;
  for (int i = 1; i <= m; ++i) {
    const int xp = next++, v = next++, w = next++, yp = next++;
    labels[xp] = "x'" + std::to_string(i);
    labels[v] = "v" + std::to_string(i);
    labels[w] = "w" + std::to_string(i);
    labels[yp] = "y'" + std::to_string(i);
    edges.insert(edges.end(),
                 {{x, xp}, {xp, v}, {v, w}, {w, yp}, {yp, y}, {x0, yp}, {xp, y1}});
  }
  for (int i = 1; i <= n; ++i) {
    const int xpp = next++, z = next++, ypp = next++;
    labels[xpp] = "x''" + std::to_string(i);
    labels[z] = "z" + std::to_string(i);
    labels[ypp] = "y''" + std::to_string(i);
    edges.insert(edges.end(),
                 {{x, xpp}, {xpp, z}, {z, ypp}, {ypp, y}, {x0, ypp}, {xpp, y1}});
  }
  for (int i = 1; i <= k; ++i) {
    const int xppp = next++, yppp = next++;
    labels[xppp] = "x'''" + std::to_string(i);
    labels[yppp] = "y'''" + std::to_string(i);
    edges.insert(edges.end(),
                 {{x, xppp}, {xppp, yppp}, {yppp, y}, {x0, yppp}, {xppp, y1}});
  }

  Graph g(next, edges);
  g.set_labels(std::move(labels));
  return MarkedPair{std::move(g), x, y};
}

TreeBall gen_tree_ball(int degree, int radius) {
  if (degree < 2) fail("TooSmall", "tree degree must be at least 2");
  if (radius < 1) fail("TooSmall", "tree radius must be at least 1");
  std::vector<std::pair<int, int>> edges;
  // Frontier of the current depth; each vertex below the leaf level spawns
  // children until its degree reaches `degree`.
  std::vector<int> frontier = {0};
  int next = 1;
  for (int depth = 0; depth < radius; ++depth) {
    std::vector<int> nextFrontier;
    for (int v : frontier) {
      const int children = (depth == 0) ? degree : degree - 1;
      for (int c = 0; c < children; ++c) {
        edges.emplace_back(v, next);
        nextFrontier.push_back(next);
        ++next;
      }
    }
    frontier = std::move(nextFrontier);
  }
  return TreeBall{Graph(next, edges), 0};
}

Graph gen_hex_torus(int a, int b) {
  if (a < 20 || b < 20 || a % 2 != 0 || b % 2 != 0) {
    fail("TooSmallForIsometry",
         "hex torus needs even a,b >= 20, got a=" + std::to_string(a) +
             " b=" + std::to_string(b));
  }
  std::vector<std::pair<int, int>> edges;
  auto id = [b](int i, int j) { return i * b + j; };
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      edges.emplace_back(id(i, j), id(i, (j + 1) % b));
      if ((i + j) % 2 == 0) edges.emplace_back(id(i, j), id((i + 1) % a, j));
    }
  }
  return Graph(a * b, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  std::vector<std::pair<int, int>> edges;
  auto id = [nh](int u, int v) { return u * nh + v; };
  for (const auto& [u1, v1] : g.edges())
    for (int w = 0; w < nh; ++w) edges.emplace_back(id(u1, w), id(v1, w));
  for (const auto& [u2, v2] : h.edges())
    for (int w = 0; w < ng; ++w) edges.emplace_back(id(w, u2), id(w, v2));
  return Graph(ng * nh, edges);
}

}  // namespace orc
