#include "doctest.h"

#include <algorithm>
#include <set>

#include "ihara/coloring.hpp"
#include "ihara/generators.hpp"
#include "ihara/rng.hpp"

using namespace ihara;

namespace {

int colors_used(const ColoredGraph& g) {
  std::set<int> seen(g.colors_by_edge().begin(), g.colors_by_edge().end());
  return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("greedy coloring uses the expected palette") {
  CHECK(colors_used(greedy_edge_coloring(cycle_graph(3))) == 3);  // = 2D-1
  CHECK(colors_used(greedy_edge_coloring(cycle_graph(4))) == 2);
  CHECK(colors_used(greedy_edge_coloring(path_graph(2))) == 1);
}

TEST_CASE("greedy coloring is proper and within 2D-1 everywhere") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_connected_graph(3, 12, 4, rng);
    const ColoredGraph colored = greedy_edge_coloring(g);
    const int bound = 2 * g.max_degree() - 1;
    for (int c : colored.colors_by_edge()) {
      CHECK(c >= 1);
      CHECK(c <= bound);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto cols = colored.colors_at(v);
      std::set<int> seen(cols.begin(), cols.end());
      CHECK(seen.size() == cols.size());  // proper at v
    }
  }
}

TEST_CASE("coloring is a function of the undirected edge") {
  const ColoredGraph colored = greedy_edge_coloring(complete_graph(4));
  for (const auto& [u, v] : colored.graph().edges())
    CHECK(colored.edge_color(u, v) == colored.edge_color(v, u));
}

TEST_CASE("count_injections on colored C3") {
  // triangle colored 1,2,3; pattern: a single color-1 edge rooted at one end
  const ColoredGraph host(cycle_graph(3), {1, 2, 3});
  const ColoredGraph pattern(path_graph(2), {1});
  CHECK(count_injections(pattern, 0, host) == 2);

  // color absent from the host: the pattern declares the host's palette
  const ColoredGraph missing(path_graph(2), {2}, 3);
  const ColoredGraph small_host(path_graph(2), {1}, 3);
  CHECK(count_injections(missing, 0, small_host) == 0);
}

TEST_CASE("single-vertex pattern counts every host vertex") {
  const ColoredGraph pattern(path_graph(1), {});
  const ColoredGraph host = greedy_edge_coloring(torus_graph(3, 1));
  CHECK(count_injections(pattern, 0, host) == 3);
}

TEST_CASE("disconnected pattern rejected") {
  const Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const ColoredGraph pattern(two_edges, {1, 1});
  const ColoredGraph host = greedy_edge_coloring(cycle_graph(4));
  CHECK_THROWS_AS(count_injections(pattern, 0, host), std::invalid_argument);
}

TEST_CASE("injection count does not depend on the root") {
  // the transport bijection behind it: an injection of (H,x) is the same map
  // as an injection of (H,y) with the image root moved
  Rng rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = random_connected_graph(4, 9, 4, rng);
    const ColoredGraph colored = greedy_edge_coloring(g);
    const ColoredBall shape = colored_ball(colored, 0, 2);
    const int reference = count_injections(shape.graph, 0, colored);
    for (int root = 1; root < shape.graph.graph().vertex_count(); ++root)
      CHECK(count_injections(shape.graph, root, colored) == reference);
  }
}

TEST_CASE("invariance discrepancy vanishes on small colored graphs") {
  CHECK(invariance_discrepancy(ColoredGraph(cycle_graph(3), {1, 2, 3}), 1) == 0);
  CHECK(invariance_discrepancy(ColoredGraph(path_graph(4), {1, 2, 1}), 2) == 0);
  CHECK(invariance_discrepancy(greedy_edge_coloring(triangle_with_pendant()), 3) == 0);
}

TEST_CASE("invariance discrepancy vanishes on random colored graphs") {
  Rng rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = random_connected_graph(4, 9, 4, rng);
    CHECK(invariance_discrepancy(greedy_edge_coloring(g), 3) == 0);
  }
}
