#include "ihara/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace ihara {

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs >= 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs >= 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph torus_graph(int side, int dim) {
  if (side < 3) throw std::invalid_argument("torus side must be >= 3");
  if (dim < 1) throw std::invalid_argument("torus dimension must be >= 1");
  long long count = 1;
  for (int k = 0; k < dim; ++k) {
    count *= side;
    if (count > 2'000'000) throw std::invalid_argument("torus too large");
  }
  const int n = static_cast<int>(count);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> coord(static_cast<std::size_t>(dim), 0);
  for (int id = 0; id < n; ++id) {
    int rest = id;
    for (int k = 0; k < dim; ++k) {
      coord[static_cast<std::size_t>(k)] = rest % side;
      rest /= side;
    }
    for (int k = 0; k < dim; ++k) {
      // +1 step in axis k; the -1 step is the reverse of another vertex's +1
      int stride = 1;
      for (int t = 0; t < k; ++t) stride *= side;
      const int c = coord[static_cast<std::size_t>(k)];
      const int fwd = id - c * stride + ((c + 1) % side) * stride;
      edges.emplace_back(std::min(id, fwd), std::max(id, fwd));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(n, edges);
}

Graph circular_ladder_graph(int n) {
  if (n < 3) throw std::invalid_argument("circular ladder needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < n; ++k) {
    edges.emplace_back(2 * k, 2 * k + 1);
    for (int s = 0; s < 2; ++s) edges.emplace_back(2 * k + s, 2 * ((k + 1) % n) + s);
  }
  return Graph::from_edges(2 * n, edges);
}

Graph triangle_with_pendant() {
  return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
}

Graph random_connected_graph(int min_vertices, int max_vertices, int degree_cap, Rng& rng) {
  if (min_vertices < 2 || max_vertices < min_vertices)
    throw std::invalid_argument("bad vertex range");
  if (degree_cap < 2) throw std::invalid_argument("degree cap must be >= 2");
  const int n = min_vertices +
                static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vertices - min_vertices + 1)));
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::set<std::pair<int, int>> edge_set;
  // random tree with capped degrees
  for (int v = 1; v < n; ++v) {
    int u;
    do {
      u = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
    } while (deg[static_cast<std::size_t>(u)] >= degree_cap);
    edge_set.insert({std::min(u, v), std::max(u, v)});
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  // sprinkle extra edges
  const int attempts = n + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n)));
  for (int t = 0; t < attempts; ++t) {
    const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    if (deg[static_cast<std::size_t>(u)] >= degree_cap || deg[static_cast<std::size_t>(v)] >= degree_cap)
      continue;
    const auto e = std::make_pair(std::min(u, v), std::max(u, v));
    if (edge_set.count(e)) continue;
    edge_set.insert(e);
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return Graph::from_edges(n, {edge_set.begin(), edge_set.end()});
}

Graph random_regular_graph(int vertex_count, int degree, Rng& rng) {
  if (vertex_count <= degree) throw std::invalid_argument("too few vertices for degree");
  if ((static_cast<long long>(vertex_count) * degree) % 2 != 0)
    throw std::invalid_argument("vertex_count * degree must be even");
  const int stubs = vertex_count * degree;
  std::vector<int> point(static_cast<std::size_t>(stubs));
  for (int attempt = 0; attempt < 5000; ++attempt) {
    for (int i = 0; i < stubs; ++i) point[static_cast<std::size_t>(i)] = i / degree;
    // Fisher-Yates
    for (int i = stubs - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
      std::swap(point[static_cast<std::size_t>(i)], point[static_cast<std::size_t>(j)]);
    }
    std::set<std::pair<int, int>> edge_set;
    bool ok = true;
    for (int i = 0; i < stubs; i += 2) {
      const int u = point[static_cast<std::size_t>(i)];
      const int v = point[static_cast<std::size_t>(i + 1)];
      if (u == v) { ok = false; break; }
      const auto e = std::make_pair(std::min(u, v), std::max(u, v));
      if (!edge_set.insert(e).second) { ok = false; break; }
    }
    if (ok) return Graph::from_edges(vertex_count, {edge_set.begin(), edge_set.end()});
  }
  throw std::runtime_error("pairing model failed to produce a simple graph");
}

}  // namespace ihara
