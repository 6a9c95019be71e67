#include "ihara/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace ihara {

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count <= 0) throw std::invalid_argument("graph needs at least one vertex");
  Graph g;
  g.adj_.resize(static_cast<std::size_t>(vertex_count));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (int v = 0; v < vertex_count; ++v) {
    auto& list = g.adj_[static_cast<std::size_t>(v)];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(list.size()));
  }
  g.edge_count_ = static_cast<int>(edges.size());
  return g;
}

int Graph::degree(VertexId v) const {
  require_vertex(*this, v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  require_vertex(*this, v);
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  require_vertex(*this, u);
  require_vertex(*this, v);
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u)
    for (VertexId v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::distances_from(VertexId x) const {
  require_vertex(*this, x);
  std::vector<int> dist(static_cast<std::size_t>(vertex_count()), -1);
  std::queue<VertexId> queue;
  dist[static_cast<std::size_t>(x)] = 0;
  queue.push(x);
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop();
    for (VertexId w : adj_[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

bool Graph::is_connected() const {
  const auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool Graph::is_regular(int* regular_degree) const {
  const int d0 = static_cast<int>(adj_[0].size());
  for (const auto& list : adj_)
    if (static_cast<int>(list.size()) != d0) return false;
  if (regular_degree) *regular_degree = d0;
  return true;
}

void require_vertex(const Graph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
}

RootedBall ball(const Graph& g, VertexId x, int r) {
  require_vertex(g, x);
  if (r < 0) throw std::invalid_argument("negative ball radius");

  // BFS to depth r; discovery order fixes the relabeling
  std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<VertexId> order;
  std::vector<int> depth;
  order.push_back(x);
  depth.push_back(0);
  new_id[static_cast<std::size_t>(x)] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    if (depth[head] == r) continue;
    for (VertexId w : g.neighbors(order[head])) {
      if (new_id[static_cast<std::size_t>(w)] < 0) {
        new_id[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
        order.push_back(w);
        depth.push_back(depth[head] + 1);
      }
    }
  }

  std::vector<std::pair<int, int>> ball_edges;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (VertexId w : g.neighbors(order[i])) {
      const int wi = new_id[static_cast<std::size_t>(w)];
      if (wi > static_cast<int>(i)) ball_edges.emplace_back(static_cast<int>(i), wi);
    }

  RootedBall b;
  b.graph = Graph::from_edges(static_cast<int>(order.size()), ball_edges);
  b.root = 0;
  b.radius = r;
  b.original_id = std::move(order);
  return b;
}

}  // namespace ihara
