#include "doctest.h"

#include <algorithm>
#include <optional>
#include <vector>

#include "ihara/canonical.hpp"
#include "ihara/coloring.hpp"
#include "ihara/generators.hpp"
#include "ihara/graph.hpp"
#include "ihara/rng.hpp"

using namespace ihara;

namespace {

// Independent brute-force rooted-isomorphism oracle: recursive bijection
// search with no refinement, small graphs only.
bool extend(const Graph& a, const Graph& b, std::vector<int>& image, std::vector<bool>& used,
            std::size_t next) {
  if (next == image.size()) {
    for (int u = 0; u < a.vertex_count(); ++u)
      for (VertexId w : a.neighbors(u))
        if (!b.has_edge(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(w)]))
          return false;
    return true;
  }
  if (image[next] >= 0) return extend(a, b, image, used, next + 1);
  for (int candidate = 0; candidate < b.vertex_count(); ++candidate) {
    if (used[static_cast<std::size_t>(candidate)]) continue;
    if (a.degree(static_cast<int>(next)) != b.degree(candidate)) continue;
    image[next] = candidate;
    used[static_cast<std::size_t>(candidate)] = true;
    if (extend(a, b, image, used, next + 1)) return true;
    image[next] = -1;
    used[static_cast<std::size_t>(candidate)] = false;
  }
  return false;
}

bool rooted_isomorphic(const RootedBall& lhs, const RootedBall& rhs) {
  if (lhs.graph.vertex_count() != rhs.graph.vertex_count()) return false;
  if (lhs.graph.edge_count() != rhs.graph.edge_count()) return false;
  std::vector<int> image(static_cast<std::size_t>(lhs.graph.vertex_count()), -1);
  std::vector<bool> used(static_cast<std::size_t>(rhs.graph.vertex_count()), false);
  image[static_cast<std::size_t>(lhs.root)] = rhs.root;
  used[static_cast<std::size_t>(rhs.root)] = true;
  return extend(lhs.graph, rhs.graph, image, used, 0);
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges())
    edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph::from_edges(g.vertex_count(), edges);
}

}  // namespace

TEST_CASE("keys agree across a vertex-transitive graph") {
  const Graph c6 = cycle_graph(6);
  const BallClassKey first = canonical_key(ball(c6, 0, 1));
  for (int v = 1; v < 6; ++v) CHECK(canonical_key(ball(c6, v, 1)) == first);
  // and its radius-1 ball is a path rooted at the middle vertex
  CHECK(first == canonical_key(ball(path_graph(3), 1, 1)));
}

TEST_CASE("root degree separates path classes") {
  const Graph p4 = path_graph(4);
  CHECK(canonical_key(ball(p4, 0, 1)) != canonical_key(ball(p4, 1, 1)));
}

TEST_CASE("keys are invariant under relabeling") {
  Rng rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_connected_graph(4, 10, 4, rng);
    const int root = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.vertex_count())));
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    for (std::size_t i = perm.size() - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
    const Graph h = permuted(g, perm);
    for (int r = 0; r <= 3; ++r)
      CHECK(canonical_key(ball(g, root, r)) ==
            canonical_key(ball(h, perm[static_cast<std::size_t>(root)], r)));
  }
}

TEST_CASE("keys separate exactly as the brute-force oracle does") {
  Rng rng(5);
  std::vector<RootedBall> balls;
  for (int trial = 0; trial < 12; ++trial) {
    const Graph g = random_connected_graph(3, 8, 3, rng);
    const int root = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.vertex_count())));
    balls.push_back(ball(g, root, 2));
  }
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (std::size_t j = i; j < balls.size(); ++j) {
      const bool same_key = canonical_key(balls[i]) == canonical_key(balls[j]);
      CHECK(same_key == rooted_isomorphic(balls[i], balls[j]));
    }
}

TEST_CASE("key decoding reproduces the class") {
  const Graph t = torus_graph(4, 2);
  const RootedBall b = ball(t, 5, 2);
  const BallClassKey key = canonical_key(b);
  const RootedBall decoded = decode_uncolored_key(key, 2);
  CHECK(canonical_key(decoded) == key);
}

TEST_CASE("colored keys see colors") {
  // P3 with edge colors 1, 2: the two pendant vertices differ as colored
  // roots but agree as uncolored roots
  const Graph p3 = path_graph(3);
  const ColoredGraph colored(p3, {1, 2});
  CHECK(canonical_key(colored, 0) != canonical_key(colored, 2));
  CHECK(canonical_key(ball(p3, 0, 2)) == canonical_key(ball(p3, 2, 2)));

  // improper: color 1 repeats at the middle vertex
  CHECK_THROWS_AS(ColoredGraph(p3, {1, 1}), std::invalid_argument);
}

TEST_CASE("colored keys are invariant under relabeling") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_connected_graph(4, 9, 4, rng);
    const ColoredGraph colored = greedy_edge_coloring(g);
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    for (std::size_t i = perm.size() - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);

    const Graph h = permuted(g, perm);
    // transport colors through the permutation
    std::vector<int> h_colors;
    for (const auto& [u, v] : h.edges()) {
      int pu = -1, pv = -1;
      for (int w = 0; w < g.vertex_count(); ++w) {
        if (perm[static_cast<std::size_t>(w)] == u) pu = w;
        if (perm[static_cast<std::size_t>(w)] == v) pv = w;
      }
      h_colors.push_back(colored.edge_color(pu, pv));
    }
    const ColoredGraph recolored(h, h_colors);
    for (int v = 0; v < g.vertex_count(); ++v)
      CHECK(canonical_key(colored, v) ==
            canonical_key(recolored, perm[static_cast<std::size_t>(v)]));
  }
}

TEST_CASE("similarity radius on colored P3") {
  const ColoredGraph colored(path_graph(3), {1, 2});
  const auto c = similarity_radius(colored, 0, 2, 3);
  REQUIRE(c.has_value());
  CHECK(*c == 0);  // radius-1 balls already differ by color
}

TEST_CASE("similarity radius saturates on identical and transitive inputs") {
  const Graph c6 = cycle_graph(6);
  CHECK(!similarity_radius(c6, 1, 1, 4).has_value());
  CHECK(!similarity_radius(c6, 0, 3, 2).has_value());
}

TEST_CASE("pseudo-ultrametric inequality for a = 2^-c") {
  // a(x,y) <= max(a(x,z), a(z,y)) <=> c(x,y) >= min(c(x,z), c(z,y)),
  // with saturated values truncated at r_max
  Rng rng(17);
  const int r_max = 3;
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = random_connected_graph(5, 10, 3, rng);
    const ColoredGraph colored = greedy_edge_coloring(g);
    auto truncated = [&](VertexId a, VertexId b) {
      const auto c = similarity_radius(colored, a, b, r_max);
      return c.has_value() ? *c : r_max;
    };
    for (int x = 0; x < g.vertex_count(); ++x)
      for (int y = 0; y < g.vertex_count(); ++y)
        for (int z = 0; z < g.vertex_count(); ++z) {
          CHECK(truncated(x, y) == truncated(y, x));
          CHECK(truncated(x, y) >= std::min(truncated(x, z), truncated(z, y)));
        }
  }
}
