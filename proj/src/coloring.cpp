#include "ihara/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "ihara/canonical.hpp"

namespace ihara {

ColoredGraph::ColoredGraph(Graph graph, std::vector<int> colors_by_edge, int color_bound)
    : g_(std::move(graph)), edge_colors_(std::move(colors_by_edge)) {
  const auto edge_list = g_.edges();
  if (edge_colors_.size() != edge_list.size())
    throw std::invalid_argument("color list does not match edge count");
  color_bound_ = color_bound > 0 ? color_bound : std::max(0, 2 * g_.max_degree() - 1);

  const int n = g_.vertex_count();
  colors_at_.assign(static_cast<std::size_t>(n), {});
  via_color_.assign(static_cast<std::size_t>(n),
                    std::vector<VertexId>(static_cast<std::size_t>(color_bound_), -1));
  for (int v = 0; v < n; ++v)
    colors_at_[static_cast<std::size_t>(v)].assign(g_.neighbors(v).size(), 0);

  std::map<std::pair<int, int>, int> color_of;
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const int c = edge_colors_[i];
    if (c < 1 || c > color_bound_)
      throw std::invalid_argument("edge color " + std::to_string(c) + " outside {1.." +
                                  std::to_string(color_bound_) + "}");
    color_of[edge_list[i]] = c;
  }
  for (int v = 0; v < n; ++v) {
    const auto nbrs = g_.neighbors(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const int u = std::min(v, nbrs[k]);
      const int w = std::max(v, nbrs[k]);
      const int c = color_of.at({u, w});
      colors_at_[static_cast<std::size_t>(v)][k] = c;
      auto& slot = via_color_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c - 1)];
      if (slot >= 0)
        throw std::invalid_argument("improper coloring: color " + std::to_string(c) +
                                    " repeats at vertex " + std::to_string(v));
      slot = nbrs[k];
    }
  }
}

std::span<const int> ColoredGraph::colors_at(VertexId v) const {
  require_vertex(g_, v);
  return colors_at_[static_cast<std::size_t>(v)];
}

int ColoredGraph::edge_color(VertexId u, VertexId v) const {
  require_vertex(g_, u);
  const auto nbrs = g_.neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return 0;
  return colors_at_[static_cast<std::size_t>(u)][static_cast<std::size_t>(it - nbrs.begin())];
}

VertexId ColoredGraph::neighbor_via(VertexId v, int color) const {
  require_vertex(g_, v);
  if (color < 1 || color > color_bound_) return -1;
  return via_color_[static_cast<std::size_t>(v)][static_cast<std::size_t>(color - 1)];
}

ColoredGraph greedy_edge_coloring(const Graph& g) {
  const auto edge_list = g.edges();  // already (min, max) sorted
  const int bound = std::max(1, 2 * g.max_degree() - 1);
  std::vector<std::vector<bool>> used(static_cast<std::size_t>(g.vertex_count()),
                                      std::vector<bool>(static_cast<std::size_t>(bound + 1), false));
  std::vector<int> colors;
  colors.reserve(edge_list.size());
  for (const auto& [u, v] : edge_list) {
    int c = 1;
    while (used[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] ||
           used[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)])
      ++c;
    used[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] = true;
    used[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = true;
    colors.push_back(c);
  }
  return ColoredGraph(g, colors);
}

ColoredBall colored_ball(const ColoredGraph& g, VertexId x, int r) {
  RootedBall b = ball(g.graph(), x, r);
  const auto ball_edges = b.graph.edges();
  std::vector<int> colors;
  colors.reserve(ball_edges.size());
  for (const auto& [u, v] : ball_edges)
    colors.push_back(g.edge_color(b.original_id[static_cast<std::size_t>(u)],
                                  b.original_id[static_cast<std::size_t>(v)]));
  return ColoredBall{ColoredGraph(std::move(b.graph), std::move(colors), g.color_bound()),
                     b.root, r, std::move(b.original_id)};
}

int count_injections(const ColoredGraph& pattern, VertexId pattern_root, const ColoredGraph& host) {
  require_vertex(pattern.graph(), pattern_root);
  if (!pattern.graph().is_connected())
    throw std::invalid_argument("injection pattern must be connected");

  const int hn = pattern.graph().vertex_count();
  int count = 0;
  std::vector<VertexId> image(static_cast<std::size_t>(hn));
  std::vector<VertexId> order;  // BFS order over the pattern
  order.reserve(static_cast<std::size_t>(hn));

  for (int v = 0; v < host.graph().vertex_count(); ++v) {
    std::vector<bool> mapped(static_cast<std::size_t>(hn), false);
    order.clear();
    order.push_back(pattern_root);
    mapped[static_cast<std::size_t>(pattern_root)] = true;
    image[static_cast<std::size_t>(pattern_root)] = v;
    bool ok = true;
    for (std::size_t head = 0; head < order.size() && ok; ++head) {
      const VertexId a = order[head];
      const auto nbrs = pattern.graph().neighbors(a);
      const auto cols = pattern.colors_at(a);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        const VertexId target = host.neighbor_via(image[static_cast<std::size_t>(a)], cols[k]);
        if (target < 0) { ok = false; break; }
        const VertexId b = nbrs[k];
        if (mapped[static_cast<std::size_t>(b)]) {
          if (image[static_cast<std::size_t>(b)] != target) { ok = false; break; }
        } else {
          mapped[static_cast<std::size_t>(b)] = true;
          image[static_cast<std::size_t>(b)] = target;
          order.push_back(b);
        }
      }
    }
    if (!ok) continue;
    std::vector<VertexId> sorted_images(image.begin(), image.end());
    std::sort(sorted_images.begin(), sorted_images.end());
    if (std::adjacent_find(sorted_images.begin(), sorted_images.end()) == sorted_images.end())
      ++count;
  }
  return count;
}

int invariance_discrepancy(const ColoredGraph& g, int radius) {
  if (radius < 0) throw std::invalid_argument("negative radius");

  // collect the distinct colored ball shapes, deduped up to unrooted
  // isomorphism via the min of rooted keys
  std::map<std::string, ColoredGraph> shapes;
  for (int v = 0; v < g.graph().vertex_count(); ++v) {
    for (int s = 0; s <= radius; ++s) {
      ColoredBall cb = colored_ball(g, v, s);
      std::string unrooted_key;
      for (int root = 0; root < cb.graph.graph().vertex_count(); ++root) {
        std::string k = canonical_key(cb.graph, root).bytes;
        if (unrooted_key.empty() || k < unrooted_key) unrooted_key = std::move(k);
      }
      shapes.emplace(std::move(unrooted_key), std::move(cb.graph));
    }
  }

  int worst = 0;
  for (const auto& [key, shape] : shapes) {
    (void)key;
    int lo = -1, hi = -1;
    for (int root = 0; root < shape.graph().vertex_count(); ++root) {
      const int c = count_injections(shape, root, g);
      if (lo < 0 || c < lo) lo = c;
      if (c > hi) hi = c;
    }
    worst = std::max(worst, hi - lo);
  }
  return worst;
}

}  // namespace ihara
