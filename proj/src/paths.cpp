#include "ihara/paths.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ihara {

namespace {

// smallest period of the length-j edge sequence; edges compared as
// (tail, head) pairs encoded against the walk's vertex buffer
int smallest_period(const std::vector<VertexId>& walk, int length) {
  // edge i (0-based) = (walk[i], walk[i+1])
  std::vector<int> fail(static_cast<std::size_t>(length), 0);
  auto edge_eq = [&](int a, int b) {
    return walk[static_cast<std::size_t>(a)] == walk[static_cast<std::size_t>(b)] &&
           walk[static_cast<std::size_t>(a + 1)] == walk[static_cast<std::size_t>(b + 1)];
  };
  for (int i = 1; i < length; ++i) {
    int k = fail[static_cast<std::size_t>(i - 1)];
    while (k > 0 && !edge_eq(i, k)) k = fail[static_cast<std::size_t>(k - 1)];
    if (edge_eq(i, k)) ++k;
    fail[static_cast<std::size_t>(i)] = k;
  }
  const int p = length - fail[static_cast<std::size_t>(length - 1)];
  return (length % p == 0) ? p : length;
}

struct Census {
  const Graph& g;
  VertexId root;
  int max_length;
  ClosedPathCounts& out;
  std::vector<VertexId> walk;

  void run() {
    walk.assign(static_cast<std::size_t>(max_length) + 1, root);
    descend(1);
  }

  void descend(int depth) {
    const VertexId here = walk[static_cast<std::size_t>(depth - 1)];
    const VertexId back = depth >= 2 ? walk[static_cast<std::size_t>(depth - 2)] : -1;
    for (VertexId next : g.neighbors(here)) {
      if (next == back) continue;  // backtrack
      walk[static_cast<std::size_t>(depth)] = next;
      if (next == root) classify(depth);
      if (depth < max_length) descend(depth + 1);
    }
  }

  void classify(int length) {
    // closed and proper; tailed iff the closing edge reverses the opening one
    if (length >= 2 && walk[static_cast<std::size_t>(length - 1)] == walk[1]) {
      ++out.tailed[static_cast<std::size_t>(length)];
      return;
    }
    ++out.reduced[static_cast<std::size_t>(length)];
    if (smallest_period(walk, length) == length)
      ++out.primitive[static_cast<std::size_t>(length)];
  }
};

}  // namespace

ClosedPathCounts count_closed_paths(const Graph& g, VertexId root, int max_length) {
  require_vertex(g, root);
  if (max_length < 1) throw std::invalid_argument("max_length must be >= 1");
  ClosedPathCounts counts;
  counts.reduced.assign(static_cast<std::size_t>(max_length) + 1, 0);
  counts.primitive.assign(static_cast<std::size_t>(max_length) + 1, 0);
  counts.tailed.assign(static_cast<std::size_t>(max_length) + 1, 0);
  Census census{g, root, max_length, counts, {}};
  census.run();
  return counts;
}

std::int64_t count_reduced_closed(const Graph& g, VertexId root, int length) {
  return count_closed_paths(g, root, length).reduced[static_cast<std::size_t>(length)];
}

std::int64_t count_primitive_reduced(const Graph& g, VertexId root, int length) {
  return count_closed_paths(g, root, length).primitive[static_cast<std::size_t>(length)];
}

std::int64_t count_tailed(const Graph& g, VertexId root, int length) {
  return count_closed_paths(g, root, length).tailed[static_cast<std::size_t>(length)];
}

namespace {

std::int64_t count_proper_walks(const Graph& g, VertexId here, VertexId back, VertexId to,
                                int remaining) {
  if (remaining == 0) return here == to ? 1 : 0;
  std::int64_t total = 0;
  for (VertexId next : g.neighbors(here))
    if (next != back) total += count_proper_walks(g, next, here, to, remaining - 1);
  return total;
}

}  // namespace

std::int64_t count_proper_paths(const Graph& g, VertexId from, VertexId to, int length) {
  require_vertex(g, from);
  require_vertex(g, to);
  if (length < 0) throw std::invalid_argument("negative path length");
  if (length == 0) return from == to ? 1 : 0;
  return count_proper_walks(g, from, -1, to, length);
}

std::int64_t PrimeCycleTable::count_at(int length) const {
  for (const auto& [len, count] : entries)
    if (len == length) return count;
  return 0;
}

namespace {

struct CycleCollector {
  const Graph& g;
  VertexId root;
  int max_length;
  std::vector<std::set<std::vector<std::int64_t>>>& classes;  // by length
  std::vector<VertexId> walk;

  void run() {
    walk.assign(static_cast<std::size_t>(max_length) + 1, root);
    descend(1);
  }

  void descend(int depth) {
    const VertexId here = walk[static_cast<std::size_t>(depth - 1)];
    const VertexId back = depth >= 2 ? walk[static_cast<std::size_t>(depth - 2)] : -1;
    for (VertexId next : g.neighbors(here)) {
      if (next == back) continue;
      walk[static_cast<std::size_t>(depth)] = next;
      if (next == root) record(depth);
      if (depth < max_length) descend(depth + 1);
    }
  }

  void record(int length) {
    if (length >= 2 && walk[static_cast<std::size_t>(length - 1)] == walk[1]) return;  // tailed
    if (smallest_period(walk, length) != length) return;                               // power
    // lexicographically minimal rotation of the edge sequence
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    std::vector<std::int64_t> seq(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i)
      seq[static_cast<std::size_t>(i)] =
          static_cast<std::int64_t>(walk[static_cast<std::size_t>(i)]) * n +
          walk[static_cast<std::size_t>(i + 1)];
    std::vector<std::int64_t> best = seq;
    std::vector<std::int64_t> rotated(seq.size());
    for (int s = 1; s < length; ++s) {
      for (int i = 0; i < length; ++i)
        rotated[static_cast<std::size_t>(i)] = seq[static_cast<std::size_t>((i + s) % length)];
      if (rotated < best) best = rotated;
    }
    classes[static_cast<std::size_t>(length)].insert(std::move(best));
  }
};

}  // namespace

PrimeCycleTable prime_cycle_table(const Graph& g, int max_length) {
  if (max_length < 1) throw std::invalid_argument("max_length must be >= 1");
  std::vector<std::set<std::vector<std::int64_t>>> classes(static_cast<std::size_t>(max_length) + 1);
  for (int x = 0; x < g.vertex_count(); ++x) {
    CycleCollector collector{g, x, max_length, classes, {}};
    collector.run();
  }
  PrimeCycleTable table;
  for (int j = 1; j <= max_length; ++j)
    if (!classes[static_cast<std::size_t>(j)].empty())
      table.entries.emplace_back(j, static_cast<std::int64_t>(classes[static_cast<std::size_t>(j)].size()));
  return table;
}

}  // namespace ihara
