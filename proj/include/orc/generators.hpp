#pragma once

#include <string_view>

#include "orc/graph.hpp"

namespace orc {

enum class BasicKind { kPath, kCycle, kComplete, kStar };

BasicKind parse_basic_kind(std::string_view name);

// n is the total vertex count. Star places the center at index 0.
// Throws Error("TooSmall") when n is below the minimum for the kind
// (cycle needs 3, the others 1).
Graph gen_basic(BasicKind kind, int n);

// The 5-vertex running example: the tree x-w-y with two extra leaves z1, z2
// attached to y; labels x,w,y,z1,z2 and marked pair (x,w). Small enough to
// read off every curvature by hand, yet it mixes positive and negative
// Lin-Lu-Yau values and exercises the positive-curvature radius bound.
MarkedPair gen_figure3_graph();

// Parametric family with marked pair (x,y) at distance 3 and regular-degree
// D = 2+m+n+k at both marks: two fixed 3-paths x-x0-y0-y, x-x1-y1-y, then
// m bridges of length 4 (x-x'_i-v_i-w_i-y'_i-y), n of length 3
// (x-x''_i-z_i-y''_i-y), k of length 2 (x-x'''_i-y'''_i-y), plus the chords
// x0-{y'_i,y''_i,y'''_i} and {x'_i,x''_i,x'''_i}-y1 that keep the marks'
// distance at 3 and pin the idleness function's two critical points at
// m/(D+m) and (m+n)/(D+m+n). Throws Error("DegenerateFamily") when
// m = n = k = 0.
MarkedPair gen_family(int m, int n, int k);

struct TreeBall {
  Graph graph;
  int root = 0;
};

// Ball of the infinite degree-d tree: every vertex at depth < radius has
// degree exactly d, depth-radius vertices are leaves. Breadth-first vertex
// numbering, root 0. Wasserstein distances between measures supported inside
// the ball at depth <= radius-2 around the root agree with the infinite tree,
// since shortest paths in a tree never leave the convex hull of the supports.
TreeBall gen_tree_ball(int degree, int radius);

// 3-regular quotient of the hexagonal tiling on an a-by-b brick-wall torus
// (a rows, b columns, both even). Vertex (i,j) is i*b+j; row edges wrap in j,
// and each vertex has one vertical edge, upward when i+j is even. Requires
// a, b >= 20 so that balls of radius 9 are isometric to the infinite tiling.
// Throws Error("TooSmallForIsometry") otherwise.
Graph gen_hex_torus(int a, int b);

// Cartesian product: (u1,u2) ~ (v1,v2) iff equal in one coordinate and
// adjacent in the other. Vertex (u1,u2) gets index u1*h.vertex_count()+u2.
// The graph metric is the sum of the factor metrics.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace orc
