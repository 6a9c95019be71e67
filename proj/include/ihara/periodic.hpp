#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "ihara/graph.hpp"
#include "ihara/group.hpp"
#include "ihara/paths.hpp"
#include "ihara/rational.hpp"
#include "ihara/series.hpp"
#include "ihara/zeta.hpp"

namespace ihara {

template <GroupCarrier G>
struct LabeledEdge {
  int from;
  int to;
  G label;
};

// Finite quotient with group-labeled edges; its covering space is the
// periodic graph. Each labeled edge is stored in both directions:
// (f, g, y) together with (g, f, y^-1).
template <GroupCarrier G>
class VoltageGraph {
 public:
  VoltageGraph(int base_vertex_count, G identity, const std::vector<LabeledEdge<G>>& edges,
               std::vector<std::int64_t> stabilizer_orders = {})
      : identity_(std::move(identity)), stabilizers_(std::move(stabilizer_orders)) {
    if (base_vertex_count <= 0)
      throw std::invalid_argument("voltage graph needs at least one base vertex");
    out_.assign(static_cast<std::size_t>(base_vertex_count), {});
    if (stabilizers_.empty())
      stabilizers_.assign(static_cast<std::size_t>(base_vertex_count), 1);
    if (static_cast<int>(stabilizers_.size()) != base_vertex_count)
      throw std::invalid_argument("stabilizer list does not match base vertex count");
    for (std::int64_t s : stabilizers_)
      if (s < 1) throw std::invalid_argument("stabilizer orders must be positive");

    for (const auto& e : edges) {
      insert(e.from, e.to, e.label);
      insert(e.to, e.from, inverse(e.label));
    }
    for (auto& list : out_) {
      std::sort(list.begin(), list.end(), [](const LabeledEdge<G>& a, const LabeledEdge<G>& b) {
        if (a.to != b.to) return a.to < b.to;
        return a.label.to_string() < b.label.to_string();
      });
      list.erase(std::unique(list.begin(), list.end(),
                             [](const LabeledEdge<G>& a, const LabeledEdge<G>& b) {
                               return a.to == b.to && a.label == b.label;
                             }),
                 list.end());
      degree_bound_ = std::max(degree_bound_, static_cast<int>(list.size()));
    }
  }

  int base_vertex_count() const { return static_cast<int>(out_.size()); }
  const G& identity_element() const { return identity_; }
  std::span<const LabeledEdge<G>> edges_at(int f) const {
    check_base(f);
    return out_[static_cast<std::size_t>(f)];
  }
  int cover_degree_bound() const { return degree_bound_; }
  const std::vector<std::int64_t>& stabilizer_orders() const { return stabilizers_; }
  bool action_is_free() const {
    return std::all_of(stabilizers_.begin(), stabilizers_.end(),
                       [](std::int64_t s) { return s == 1; });
  }

 private:
  void check_base(int f) const {
    if (f < 0 || f >= base_vertex_count())
      throw std::invalid_argument("base vertex out of range: " + std::to_string(f));
  }
  void insert(int from, int to, G label) {
    check_base(from);
    check_base(to);
    if (from == to && label.is_identity())
      throw std::invalid_argument("cover loop: identity label on a base loop at vertex " +
                                  std::to_string(from));
    out_[static_cast<std::size_t>(from)].push_back({from, to, std::move(label)});
  }

  G identity_;
  std::vector<std::vector<LabeledEdge<G>>> out_;
  std::vector<std::int64_t> stabilizers_;
  int degree_bound_ = 0;
};

// Finite patch of the covering space. Vertices carry (base vertex, group
// element) identities; vertex 0 is the BFS root with identity translation.
template <GroupCarrier G>
struct PeriodicBall {
  RootedBall ball;
  std::vector<std::pair<int, G>> identity;  // per ball vertex
};

// Patch around the whole fundamental domain (multi-source to depth r); used
// by the sofic construction.
template <GroupCarrier G>
struct CoverPatch {
  Graph graph;
  std::vector<std::pair<int, G>> identity;
  std::vector<int> depth;
};

namespace detail {

template <GroupCarrier G>
struct CoverVertexHash {
  std::size_t operator()(const std::pair<int, G>& v) const {
    return v.second.hash_code() * 1000003u + static_cast<std::size_t>(v.first);
  }
};

// multi-source BFS over the cover; throws when two distinct labeled edges
// produce the same cover edge (multi-edge in the cover)
template <GroupCarrier G>
CoverPatch<G> unfold_from_sources(const VoltageGraph<G>& vg,
                                  const std::vector<std::pair<int, G>>& sources, int r) {
  if (r < 0) throw std::invalid_argument("negative unfolding radius");
  std::unordered_map<std::pair<int, G>, int, CoverVertexHash<G>> id_of;
  CoverPatch<G> patch;
  for (const auto& s : sources) {
    if (id_of.emplace(s, static_cast<int>(patch.identity.size())).second) {
      patch.identity.push_back(s);
      patch.depth.push_back(0);
    }
  }
  for (std::size_t head = 0; head < patch.identity.size(); ++head) {
    if (patch.depth[head] == r) continue;
    const auto [f, gamma] = patch.identity[head];
    for (const auto& e : vg.edges_at(f)) {
      std::pair<int, G> next{e.to, compose(gamma, e.label)};
      if (id_of.emplace(next, static_cast<int>(patch.identity.size())).second) {
        patch.identity.push_back(next);
        patch.depth.push_back(patch.depth[head] + 1);
      }
    }
  }

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < patch.identity.size(); ++i) {
    const auto& [f, gamma] = patch.identity[i];
    for (const auto& e : vg.edges_at(f)) {
      const auto it = id_of.find({e.to, compose(gamma, e.label)});
      if (it != id_of.end() && it->second > static_cast<int>(i))
        edges.emplace_back(static_cast<int>(i), it->second);
    }
  }
  std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    const auto& [f, gamma] = patch.identity[static_cast<std::size_t>(dup->first)];
    throw std::invalid_argument("cover multi-edge at base vertex " + std::to_string(f) +
                                ", translation " + gamma.to_string());
  }
  patch.graph = Graph::from_edges(static_cast<int>(patch.identity.size()), edges);
  return patch;
}

}  // namespace detail

template <GroupCarrier G>
PeriodicBall<G> unfold(const VoltageGraph<G>& vg, int f, int r) {
  CoverPatch<G> patch =
      detail::unfold_from_sources(vg, {{f, vg.identity_element()}}, r);
  PeriodicBall<G> out;
  out.ball.graph = std::move(patch.graph);
  out.ball.root = 0;
  out.ball.radius = r;
  out.ball.original_id.assign(static_cast<std::size_t>(out.ball.graph.vertex_count()), 0);
  for (int v = 0; v < out.ball.graph.vertex_count(); ++v) out.ball.original_id[static_cast<std::size_t>(v)] = v;
  out.identity = std::move(patch.identity);
  return out;
}

template <GroupCarrier G>
CoverPatch<G> unfold_around_domain(const VoltageGraph<G>& vg, int r) {
  std::vector<std::pair<int, G>> sources;
  sources.reserve(static_cast<std::size_t>(vg.base_vertex_count()));
  for (int f = 0; f < vg.base_vertex_count(); ++f)
    sources.emplace_back(f, vg.identity_element());
  return detail::unfold_from_sources(vg, sources, r);
}

// nbar_j = sum_{f in F} N_j(f) / |stab(f)|, each N_j(f) read off a local
// unfolding of radius ceil(j/2)+1 (reduced closed paths are that local).
template <GroupCarrier G>
ZetaCoefficients periodic_coefficients(const VoltageGraph<G>& vg, int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  const int radius = (order + 1) / 2 + 1;
  ZetaCoefficients out;
  out.mode = MeasureMode::counting;
  out.nbar.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  out.pbar.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int f = 0; f < vg.base_vertex_count(); ++f) {
    const PeriodicBall<G> patch = unfold(vg, f, radius);
    const ClosedPathCounts census = count_closed_paths(patch.ball.graph, patch.ball.root, order);
    const Rational weight(1, static_cast<long>(vg.stabilizer_orders()[static_cast<std::size_t>(f)]));
    for (int j = 1; j <= order; ++j) {
      out.nbar[static_cast<std::size_t>(j)] += Rational(census.reduced[static_cast<std::size_t>(j)]) * weight;
      out.pbar[static_cast<std::size_t>(j)] += Rational(census.primitive[static_cast<std::size_t>(j)]) * weight;
    }
  }
  return out;
}

template <GroupCarrier G>
SeriesQ periodic_zeta_series(const VoltageGraph<G>& vg, int order) {
  return zeta_series_from_coefficients(periodic_coefficients(vg, order));
}

using AnyVoltageGraph = std::variant<VoltageGraph<ZVec>, VoltageGraph<FreeWord>>;

// standard builders

// Z^d lattice: one base vertex, a loop per axis
VoltageGraph<ZVec> lattice_voltage_graph(int dim);
// Z acting on Z x {0,1}
VoltageGraph<ZVec> ladder_voltage_graph();
// hexagonal lattice: two base vertices, three Z^2 labels
VoltageGraph<ZVec> honeycomb_voltage_graph();
// Cayley graph of the free group: one base vertex, a loop per generator
VoltageGraph<FreeWord> free_cayley_voltage_graph(int rank);

}  // namespace ihara
