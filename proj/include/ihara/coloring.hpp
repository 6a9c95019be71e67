#pragma once

#include <span>
#include <vector>

#include "ihara/graph.hpp"

namespace ihara {

// Proper edge coloring: a color is a property of the undirected edge, incident
// edges get distinct colors, and color values lie in {1..N} with N at most
// 2D-1 for the declared degree bound. Properness makes walks by color
// sequence deterministic.
class ColoredGraph {
 public:
  // colors_by_edge runs parallel to graph.edges() (u < v, lexicographic).
  // color_bound declares the palette size N; 0 derives 2D-1 from the graph
  // itself. Subgraphs induced from a larger host keep the host's palette.
  ColoredGraph(Graph graph, std::vector<int> colors_by_edge, int color_bound = 0);

  const Graph& graph() const { return g_; }
  const std::vector<int>& colors_by_edge() const { return edge_colors_; }
  int color_bound() const { return color_bound_; }  // the declared N

  // colors parallel to graph().neighbors(v)
  std::span<const int> colors_at(VertexId v) const;
  int edge_color(VertexId u, VertexId v) const;  // 0 when not adjacent
  // the unique neighbor reached from v along an edge of this color, or -1
  VertexId neighbor_via(VertexId v, int color) const;

 private:
  Graph g_;
  std::vector<int> edge_colors_;
  std::vector<std::vector<int>> colors_at_;
  std::vector<std::vector<VertexId>> via_color_;  // [v][color-1] -> neighbor or -1
  int color_bound_ = 0;
};

// Deterministic greedy coloring over edges sorted by (min endpoint, max
// endpoint); never needs more than 2D-1 colors since an edge meets at most
// 2(D-1) others.
ColoredGraph greedy_edge_coloring(const Graph& g);

// Induced colored ball, relabeled like ball()
struct ColoredBall {
  ColoredGraph graph;
  VertexId root;
  int radius;
  std::vector<VertexId> original_id;
};

ColoredBall colored_ball(const ColoredGraph& g, VertexId x, int r);

// Number of vertices v of host such that the connected rooted pattern maps
// into (host, v) by a color-preserving injection. Properness gives at most
// one candidate image per root, so the search walks colors deterministically.
int count_injections(const ColoredGraph& pattern, VertexId pattern_root, const ColoredGraph& host);

// Max over all connected colored graphs H arising as radius <= r balls of g
// and over root pairs x, y of |count_injections((H,x),g) - count_injections((H,y),g)|.
// Zero for every properly colored finite graph.
int invariance_discrepancy(const ColoredGraph& g, int radius);

}  // namespace ihara
