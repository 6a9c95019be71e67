#pragma once

#include "ihara/graph.hpp"
#include "ihara/rng.hpp"

namespace ihara {

Graph cycle_graph(int n);     // n >= 3
Graph path_graph(int n);      // n >= 1
Graph complete_graph(int n);  // n >= 1

// d-dimensional discrete torus (C_side)^dim; side >= 3 keeps it simple
Graph torus_graph(int side, int dim);

// prism C_n x K_2; vertex (k, s) has id 2k + s
Graph circular_ladder_graph(int n);

// triangle 0-1-2 with pendant vertex 3 attached to 0
Graph triangle_with_pendant();

// connected, simple, max degree <= degree_cap; vertex count uniform in
// [min_vertices, max_vertices]; deterministic for a given rng state
Graph random_connected_graph(int min_vertices, int max_vertices, int degree_cap, Rng& rng);

// pairing-model random regular graph; vertex_count * degree must be even
Graph random_regular_graph(int vertex_count, int degree, Rng& rng);

}  // namespace ihara
