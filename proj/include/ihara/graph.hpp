#pragma once

#include <span>
#include <utility>
#include <vector>

namespace ihara {

using VertexId = int;

// Finite simple undirected graph with bounded degree. Neighbor lists are
// strictly increasing; construction rejects loops, duplicate edges and
// out-of-range ids. Values are immutable after construction.
class Graph {
 public:
  static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }  // undirected edges
  int degree(VertexId v) const;
  int max_degree() const { return max_degree_; }  // the degree bound D
  std::span<const VertexId> neighbors(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  // all undirected edges as (u, v) with u < v, sorted lexicographically
  std::vector<std::pair<int, int>> edges() const;

  // BFS distances from x; -1 marks unreachable vertices
  std::vector<int> distances_from(VertexId x) const;
  bool is_connected() const;
  // true iff every vertex has the same degree (returned through regular_degree)
  bool is_regular(int* regular_degree = nullptr) const;

 private:
  std::vector<std::vector<VertexId>> adj_;
  int edge_count_ = 0;
  int max_degree_ = 0;
};

void require_vertex(const Graph& g, VertexId v);

// Induced subgraph on the combinatorial r-ball around a root, relabeled to
// dense ids in BFS discovery order (the root becomes vertex 0).
struct RootedBall {
  Graph graph;
  VertexId root = 0;
  int radius = 0;                     // the requested radius
  std::vector<VertexId> original_id;  // ball id -> id in the source graph
};

RootedBall ball(const Graph& g, VertexId x, int r);

}  // namespace ihara
