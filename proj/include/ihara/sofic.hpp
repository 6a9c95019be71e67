#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ihara/canonical.hpp"
#include "ihara/graph.hpp"
#include "ihara/group.hpp"
#include "ihara/limits.hpp"
#include "ihara/periodic.hpp"
#include "ihara/rational.hpp"
#include "ihara/rng.hpp"

namespace ihara {

// permutation of {0..N-1} as its image table
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
Permutation identity_permutation(int degree);
Permutation compose_permutations(const Permutation& s, const Permutation& t);  // s after t
Permutation inverse_permutation(const Permutation& p);
// fraction of points where the two disagree
double hamming_distance(const Permutation& a, const Permutation& b);

enum class HomProvenance { quotient, random_seeded, user };

// Partial map from group elements into Sym(N). The domain is expected to
// cover T~ = TT u (TT)^-1 u T^-1 T u T T^-1 for the window set T in play.
template <GroupCarrier G>
struct AlmostHom {
  int degree = 0;
  std::unordered_map<G, Permutation, GroupHash<G>> table;
  HomProvenance provenance = HomProvenance::user;

  bool covers(const G& g) const { return table.find(g) != table.end(); }
  const Permutation& image(const G& g) const {
    const auto it = table.find(g);
    if (it == table.end())
      throw std::invalid_argument("almost homomorphism table misses element " + g.to_string());
    return it->second;
  }
};

// deterministically ordered element set (sorted by textual form)
template <GroupCarrier G>
using GroupSet = std::vector<G>;

namespace detail {

template <GroupCarrier G>
void sort_group_set(GroupSet<G>& set) {
  std::sort(set.begin(), set.end(),
            [](const G& a, const G& b) { return a.to_string() < b.to_string(); });
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

}  // namespace detail

// T = all translations reaching the r-ball around the fundamental domain;
// requires a free action. Always contains the identity.
template <GroupCarrier G>
GroupSet<G> build_T(const VoltageGraph<G>& vg, int r) {
  if (!vg.action_is_free())
    throw std::invalid_argument("window set needs a free action (all stabilizers 1)");
  GroupSet<G> out;
  for (int f = 0; f < vg.base_vertex_count(); ++f) {
    const PeriodicBall<G> patch = unfold(vg, f, r);
    for (const auto& [base, gamma] : patch.identity) out.push_back(gamma);
  }
  detail::sort_group_set(out);
  return out;
}

// TT u (TT)^-1 u T^-1 T u T T^-1
template <GroupCarrier G>
GroupSet<G> build_Ttilde(const GroupSet<G>& t_set) {
  GroupSet<G> out;
  for (const G& a : t_set)
    for (const G& b : t_set) {
      const G ab = compose(a, b);
      out.push_back(ab);
      out.push_back(inverse(ab));
      out.push_back(compose(inverse(a), b));
      out.push_back(compose(a, inverse(b)));
    }
  detail::sort_group_set(out);
  return out;
}

// Translation action on {0..n^d - 1} (row-major); a genuine homomorphism.
// When two domain elements coincide mod n the separation defect collapses to
// zero; the defect report exposes it and the caller should raise n.
AlmostHom<ZVec> make_quotient_hom_zd(int modulus, int dim, const GroupSet<ZVec>& domain);

// Independent uniform permutations per free generator (seeded), extended to
// the domain words by composition.
AlmostHom<FreeWord> make_random_almost_hom(int rank, int degree, std::uint64_t seed,
                                           const GroupSet<FreeWord>& domain);

// load "element image0 image1 ..." lines; parse_element interprets the token
template <GroupCarrier G, class ParseElement>
AlmostHom<G> almost_hom_from_table(int degree, const std::vector<std::string>& lines,
                                   ParseElement parse_element);

struct DefectReport {
  double multiplicativity = 0.0;  // max d_H(s_a s_b, s_ab) over pairs with ab in the domain
  double unit = 0.0;              // d_H(s_e, id)
  double separation = 1.0;        // min d_H(s_a, s_b) over distinct pairs
};

template <GroupCarrier G>
DefectReport defects(const AlmostHom<G>& hom, const GroupSet<G>& domain) {
  DefectReport report;
  for (const G& g : domain)
    if (!hom.covers(g))
      throw std::invalid_argument("defect domain misses element " + g.to_string());
  bool have_pair = false;
  for (const G& a : domain) {
    if (a.is_identity())
      report.unit = hamming_distance(hom.image(a), identity_permutation(hom.degree));
    for (const G& b : domain) {
      const G ab = compose(a, b);
      if (hom.covers(ab)) {
        const double d =
            hamming_distance(compose_permutations(hom.image(a), hom.image(b)), hom.image(ab));
        report.multiplicativity = std::max(report.multiplicativity, d);
      }
      if (!(a == b)) {
        const double d = hamming_distance(hom.image(a), hom.image(b));
        report.separation = have_pair ? std::min(report.separation, d) : d;
        have_pair = true;
      }
    }
  }
  return report;
}

// The finite approximant on F x {0..N-1}: (f,i) ~ (g,j) iff some cover edge
// gamma f ~ gamma' g with gamma, gamma' in T matches sigma_gamma(i) =
// sigma_gamma'(j). Vertex (f,i) gets id f*N + i.
struct SoficGraphResult {
  Graph graph;
  bool degree_bound_exceeded = false;  // some vertex exceeds the cover bound
  int max_degree = 0;
};

template <GroupCarrier G>
SoficGraphResult sofic_graph(const VoltageGraph<G>& vg, int r, const AlmostHom<G>& hom);

// Fraction of indices i whose window map phi_i(x) = (pi(x), sigma_{gamma_x^-1}(i))
// is injective and edge-preserving in both directions onto its image.
template <GroupCarrier G>
double good_index_fraction(const VoltageGraph<G>& vg, int r, const AlmostHom<G>& hom);

struct ClassDeviation {
  BallClassKey key;
  Rational sofic_frequency;
  Rational cover_frequency;
  Rational deviation;
};

struct DeltaGuaranteeReport {
  double delta = 0.0;
  double epsilon_required = 0.0;  // delta / (2 |T~|^2)
  bool epsilon_satisfied = false;
  bool applicable = false;  // the guarantee only binds when the defects meet epsilon
  DefectReport defect;
  std::size_t t_size = 0;
  std::size_t ttilde_size = 0;
  std::vector<ClassDeviation> per_class;
  Rational max_deviation;
  bool holds = false;  // max_deviation < delta
  double good_fraction = 0.0;
  double good_fraction_lower_bound = 0.0;
};

// Measures |p(G_r, alpha) - |F_alpha| / |F|| across every radius-r class seen
// on either side, plus the index-quality figures.
template <GroupCarrier G>
DeltaGuaranteeReport check_delta_guarantee(const VoltageGraph<G>& vg, int r,
                                           const AlmostHom<G>& hom, double delta);

// --- template implementations ---

template <GroupCarrier G, class ParseElement>
AlmostHom<G> almost_hom_from_table(int degree, const std::vector<std::string>& lines,
                                   ParseElement parse_element) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  AlmostHom<G> hom;
  hom.degree = degree;
  hom.provenance = HomProvenance::user;
  for (const std::string& line : lines) {
    std::size_t pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::size_t end = line.find_first_of(" \t", pos);
    if (end == std::string::npos) throw std::invalid_argument("table line misses images: " + line);
    const G element = parse_element(line.substr(pos, end - pos));
    Permutation image;
    image.reserve(static_cast<std::size_t>(degree));
    pos = end;
    while (pos < line.size()) {
      pos = line.find_first_not_of(" \t", pos);
      if (pos == std::string::npos) break;
      end = line.find_first_of(" \t", pos);
      if (end == std::string::npos) end = line.size();
      image.push_back(std::stoi(line.substr(pos, end - pos)));
      pos = end;
    }
    if (static_cast<int>(image.size()) != degree || !is_permutation(image))
      throw std::invalid_argument("bad permutation in table line: " + line);
    hom.table[element] = std::move(image);
  }
  return hom;
}

template <GroupCarrier G>
SoficGraphResult sofic_graph(const VoltageGraph<G>& vg, int r, const AlmostHom<G>& hom) {
  if (!vg.action_is_free())
    throw std::invalid_argument("sofic construction needs a free action");
  const GroupSet<G> t_set = build_T(vg, r);
  std::unordered_set<G, GroupHash<G>> t_lookup(t_set.begin(), t_set.end());
  const int big_n = hom.degree;
  const int base = vg.base_vertex_count();

  std::vector<std::pair<int, int>> edges;
  for (const G& gamma : t_set) {
    const Permutation lhs_inv = inverse_permutation(hom.image(gamma));
    for (int f = 0; f < base; ++f) {
      for (const auto& e : vg.edges_at(f)) {
        const G gamma_prime = compose(gamma, e.label);
        if (!t_lookup.count(gamma_prime)) continue;
        const Permutation rhs_inv = inverse_permutation(hom.image(gamma_prime));
        for (int m = 0; m < big_n; ++m) {
          const int a = f * big_n + lhs_inv[static_cast<std::size_t>(m)];
          const int b = e.to * big_n + rhs_inv[static_cast<std::size_t>(m)];
          if (a == b) continue;  // no loops
          edges.emplace_back(std::min(a, b), std::max(a, b));
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  SoficGraphResult result{Graph::from_edges(base * big_n, edges), false, 0};
  result.max_degree = result.graph.max_degree();
  result.degree_bound_exceeded = result.max_degree > vg.cover_degree_bound();
  return result;
}

template <GroupCarrier G>
double good_index_fraction(const VoltageGraph<G>& vg, int r, const AlmostHom<G>& hom) {
  const SoficGraphResult approx = sofic_graph(vg, r, hom);
  const CoverPatch<G> patch = unfold_around_domain(vg, r);
  const int big_n = hom.degree;
  const int patch_size = patch.graph.vertex_count();

  // sigma_{gamma_x^{-1}} per patch vertex, deduplicated by element
  std::unordered_map<G, Permutation, GroupHash<G>> inv_images;
  for (const auto& [f, gamma] : patch.identity) {
    const G gi = inverse(gamma);
    if (!inv_images.count(gi)) inv_images.emplace(gi, hom.image(gi));
  }

  std::vector<const Permutation*> sigma_of(static_cast<std::size_t>(patch_size));
  std::vector<int> base_of(static_cast<std::size_t>(patch_size));
  for (int x = 0; x < patch_size; ++x) {
    const auto& [f, gamma] = patch.identity[static_cast<std::size_t>(x)];
    sigma_of[static_cast<std::size_t>(x)] = &inv_images.at(inverse(gamma));
    base_of[static_cast<std::size_t>(x)] = f;
  }

  std::vector<int> owner(static_cast<std::size_t>(approx.graph.vertex_count()), -1);
  std::vector<int> stamp(static_cast<std::size_t>(approx.graph.vertex_count()), -1);
  std::vector<int> image(static_cast<std::size_t>(patch_size), 0);

  int good = 0;
  for (int i = 0; i < big_n; ++i) {
    bool ok = true;
    for (int x = 0; x < patch_size && ok; ++x) {
      const int target = base_of[static_cast<std::size_t>(x)] * big_n +
                         (*sigma_of[static_cast<std::size_t>(x)])[static_cast<std::size_t>(i)];
      if (stamp[static_cast<std::size_t>(target)] == i) ok = false;  // collision
      stamp[static_cast<std::size_t>(target)] = i;
      owner[static_cast<std::size_t>(target)] = x;
      image[static_cast<std::size_t>(x)] = target;
    }
    // forward: patch edges must map to approximant edges
    for (int x = 0; x < patch_size && ok; ++x)
      for (VertexId y : patch.graph.neighbors(x)) {
        if (!approx.graph.has_edge(image[static_cast<std::size_t>(x)],
                                   image[static_cast<std::size_t>(y)])) {
          ok = false;
          break;
        }
      }
    // backward: approximant edges inside the image must come from patch edges
    for (int x = 0; x < patch_size && ok; ++x)
      for (VertexId w : approx.graph.neighbors(image[static_cast<std::size_t>(x)])) {
        if (stamp[static_cast<std::size_t>(w)] != i) continue;
        if (!patch.graph.has_edge(x, owner[static_cast<std::size_t>(w)])) {
          ok = false;
          break;
        }
      }
    if (ok) ++good;
  }
  return static_cast<double>(good) / static_cast<double>(big_n);
}

template <GroupCarrier G>
DeltaGuaranteeReport check_delta_guarantee(const VoltageGraph<G>& vg, int r,
                                           const AlmostHom<G>& hom, double delta) {
  if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
  DeltaGuaranteeReport report;
  report.delta = delta;

  const GroupSet<G> t_set = build_T(vg, r);
  const GroupSet<G> ttilde = build_Ttilde(t_set);
  report.t_size = t_set.size();
  report.ttilde_size = ttilde.size();
  report.epsilon_required =
      delta / (2.0 * static_cast<double>(ttilde.size()) * static_cast<double>(ttilde.size()));
  report.defect = defects(hom, ttilde);
  report.epsilon_satisfied = report.defect.multiplicativity < report.epsilon_required &&
                             report.defect.unit < report.epsilon_required &&
                             report.defect.separation >= 1.0 - report.epsilon_required;
  report.applicable = report.epsilon_satisfied;

  const SoficGraphResult approx = sofic_graph(vg, r, hom);
  const BallDistribution sofic_dist = ball_distribution(approx.graph, r);

  const int base = vg.base_vertex_count();
  std::map<BallClassKey, Rational> cover_freq;
  for (int f = 0; f < base; ++f) {
    const PeriodicBall<G> patch = unfold(vg, f, r);
    cover_freq[canonical_key(patch.ball)] += Rational(1, base);
  }

  std::set<BallClassKey> keys;
  for (const auto& [key, freq] : sofic_dist.frequencies()) keys.insert(key);
  for (const auto& [key, freq] : cover_freq) keys.insert(key);

  report.max_deviation = Rational(0);
  for (const auto& key : keys) {
    ClassDeviation row;
    row.key = key;
    row.sofic_frequency = sofic_dist.frequency(key);
    const auto it = cover_freq.find(key);
    row.cover_frequency = it == cover_freq.end() ? Rational(0) : it->second;
    row.deviation = rational_abs(Rational(row.sofic_frequency - row.cover_frequency));
    if (row.deviation > report.max_deviation) report.max_deviation = row.deviation;
    report.per_class.push_back(std::move(row));
  }
  report.holds = report.max_deviation.get_d() < delta;

  report.good_fraction = good_index_fraction(vg, r, hom);
  const double tt = static_cast<double>(ttilde.size());
  report.good_fraction_lower_bound =
      std::max(0.0, 1.0 - 2.0 * report.defect.multiplicativity * tt * tt -
                        2.0 * (1.0 - report.defect.separation) * tt * tt);
  return report;
}

}  // namespace ihara
