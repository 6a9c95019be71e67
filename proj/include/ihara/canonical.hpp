#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include "ihara/coloring.hpp"
#include "ihara/graph.hpp"

namespace ihara {

// Canonical byte encoding of a rooted (optionally edge-colored) graph.
// Equal keys iff isomorphic as rooted (colored) graphs.
struct BallClassKey {
  std::string bytes;

  auto operator<=>(const BallClassKey&) const = default;
  std::string hex() const;
  static BallClassKey from_hex(const std::string& text);

  struct Hash {
    std::size_t operator()(const BallClassKey& k) const;
  };
};

// Uncolored rooted graph: iterated degree refinement with backtracking over
// the smallest cell; the key is the lexicographically minimal adjacency
// encoding across the search tree.
BallClassKey canonical_key(const RootedBall& b);

// Colored rooted graph: a deterministic BFS expanding incident edges in color
// order. Properness makes the traversal string a complete invariant.
BallClassKey canonical_key(const ColoredGraph& g, VertexId root);

// Convenience: key the ball with colors induced from the ambient coloring.
BallClassKey canonical_key(const RootedBall& b, const ColoredGraph& ambient_colors);

// Rebuild the rooted graph a canonical (uncolored) key encodes.
RootedBall decode_uncolored_key(const BallClassKey& key, int radius);

// Largest r <= r_max with isomorphic radius-r balls around x and y;
// nullopt means the balls agree at every radius up to r_max ("≥ r_max").
std::optional<int> similarity_radius(const Graph& g, VertexId x, VertexId y, int r_max);
std::optional<int> similarity_radius(const ColoredGraph& g, VertexId x, VertexId y, int r_max);

}  // namespace ihara
