#pragma once

#include <cstdint>
#include <vector>

#include "ihara/graph.hpp"

namespace ihara {

// Closed-path census at a root, indexed by length j (entry [0] unused).
// reduced[j]   : closed paths with no backtrack and no tail       (N_j)
// primitive[j] : reduced ones that are not proper powers          (P_j)
// tailed[j]    : proper closed paths whose last edge reverses the first (t_j)
struct ClosedPathCounts {
  std::vector<std::int64_t> reduced;
  std::vector<std::int64_t> primitive;
  std::vector<std::int64_t> tailed;
};

// Depth-first enumeration of non-backtracking paths from the root, classifying
// every closure up to max_length. Deliberately the slow, obviously-correct
// route; neighbor order is ascending, so enumeration is reproducible.
ClosedPathCounts count_closed_paths(const Graph& g, VertexId root, int max_length);

std::int64_t count_reduced_closed(const Graph& g, VertexId root, int length);
std::int64_t count_primitive_reduced(const Graph& g, VertexId root, int length);
std::int64_t count_tailed(const Graph& g, VertexId root, int length);

// Non-backtracking paths from -> to of the given length (tails allowed).
std::int64_t count_proper_paths(const Graph& g, VertexId from, VertexId to, int length);

// Rotation classes of primitive reduced closed paths, by length.
struct PrimeCycleTable {
  std::vector<std::pair<int, std::int64_t>> entries;  // (length, cycles), sorted, zero-free
  std::int64_t count_at(int length) const;
};

PrimeCycleTable prime_cycle_table(const Graph& g, int max_length);

}  // namespace ihara
