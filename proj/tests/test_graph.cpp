#include "doctest.h"

#include <stdexcept>

#include "ihara/generators.hpp"
#include "ihara/graph.hpp"
#include "ihara/rng.hpp"

using namespace ihara;

TEST_CASE("triangle and path construction") {
  const Graph c3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(c3.vertex_count() == 3);
  CHECK(c3.edge_count() == 3);
  CHECK(c3.max_degree() == 2);
  CHECK(c3.has_edge(0, 2));

  const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.max_degree() == 2);
  CHECK(p4.degree(0) == 1);
  CHECK(p4.degree(1) == 2);
}

TEST_CASE("construction rejects degenerate input") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(0, {}), std::invalid_argument);
}

TEST_CASE("neighbor lists are strictly increasing and symmetric") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_connected_graph(3, 10, 4, rng);
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto nbrs = g.neighbors(v);
      for (std::size_t k = 1; k < nbrs.size(); ++k) CHECK(nbrs[k - 1] < nbrs[k]);
      for (VertexId w : nbrs) {
        CHECK(w != v);
        CHECK(g.has_edge(w, v));
      }
    }
    CHECK(g.is_connected());
    CHECK(g.max_degree() <= 4);
  }
}

TEST_CASE("BFS distances") {
  const Graph p4 = path_graph(4);
  const auto dist = p4.distances_from(0);
  CHECK(dist == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("balls are induced subgraphs of the right radius") {
  const Graph c6 = cycle_graph(6);
  const RootedBall b = ball(c6, 2, 1);
  CHECK(b.graph.vertex_count() == 3);
  CHECK(b.graph.edge_count() == 2);
  CHECK(b.root == 0);
  CHECK(b.radius == 1);
  CHECK(b.original_id[0] == 2);

  const RootedBall single = ball(c6, 0, 0);
  CHECK(single.graph.vertex_count() == 1);
  CHECK(single.graph.edge_count() == 0);

  // endpoint of P4 at radius 2: a 3-vertex path rooted at one end
  const RootedBall end = ball(path_graph(4), 0, 2);
  CHECK(end.graph.vertex_count() == 3);
  CHECK(end.graph.edge_count() == 2);
  CHECK(end.graph.degree(end.root) == 1);
  for (int v = 0; v < end.graph.vertex_count(); ++v)
    CHECK(end.graph.distances_from(end.root)[static_cast<std::size_t>(v)] <= 2);
}

TEST_CASE("torus generator is 2d-regular") {
  const Graph t = torus_graph(4, 2);
  CHECK(t.vertex_count() == 16);
  int degree = 0;
  CHECK(t.is_regular(&degree));
  CHECK(degree == 4);
  CHECK(t.edge_count() == 32);

  const Graph t3 = torus_graph(3, 1);
  CHECK(t3.vertex_count() == 3);
  CHECK(t3.edge_count() == 3);  // C_3
}

TEST_CASE("random regular generator") {
  Rng rng(99);
  const Graph g = random_regular_graph(20, 3, rng);
  int degree = 0;
  CHECK(g.is_regular(&degree));
  CHECK(degree == 3);
}
