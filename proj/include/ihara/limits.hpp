#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ihara/canonical.hpp"
#include "ihara/graph.hpp"
#include "ihara/periodic.hpp"
#include "ihara/rational.hpp"
#include "ihara/zeta.hpp"

namespace ihara {

// Empirical frequencies of rooted r-ball classes. Exact rational weights; a
// representative ball is kept per class so path counts can be read off later.
class BallDistribution {
 public:
  BallDistribution(int radius, int degree_bound);

  int radius() const { return radius_; }
  int degree_bound() const { return degree_bound_; }
  const std::map<BallClassKey, Rational>& frequencies() const { return freq_; }
  const RootedBall& representative(const BallClassKey& key) const;
  Rational frequency(const BallClassKey& key) const;  // 0 when absent
  Rational total() const;

  void add_class(const BallClassKey& key, const Rational& weight, RootedBall representative);

 private:
  int radius_;
  int degree_bound_;
  std::map<BallClassKey, Rational> freq_;
  std::map<BallClassKey, RootedBall> rep_;
};

BallDistribution ball_distribution(const Graph& g, int radius);

// reduced closed paths of length j at the ball's root; the ball radius must
// be at least ceil(j/2)+1 so the count matches the ambient graph
std::int64_t nj_of_class(const RootedBall& b, int length);

// nbar_j = sum_alpha N_j(alpha) p(alpha); normalized mode
ZetaCoefficients limit_coefficients(const BallDistribution& d, int order);

// total variation distance; radii must match
Rational distribution_distance(const BallDistribution& p, const BallDistribution& q);

// re-key every class at a smaller radius and merge frequencies
BallDistribution coarsen(const BallDistribution& d, int radius);

// --- convergence runner ---

struct SequenceMember {
  std::string label;
  std::int64_t parameter = 0;
  Graph graph;
};

using GraphSequence = std::vector<SequenceMember>;

GraphSequence make_cycle_family(int from, int to, int step = 1);
GraphSequence make_torus_family(int from, int to, int step = 1, int dim = 2);

// The limit of a weakly convergent family: a voltage graph (compare against
// stabilizer-weighted periodic coefficients over |F|) or an explicit ball
// distribution.
struct ConvergenceLimit {
  std::variant<AnyVoltageGraph, BallDistribution> target;

  int fundamental_domain_size() const;
  // normalized per fundamental-domain vertex, directly comparable with
  // normalized finite-graph coefficients
  std::vector<Rational> normalized_nbar(int order) const;
  // the comparison value L(u): periodic zeta (unnormalized) for voltage
  // limits, plain limit zeta for distributions
  std::vector<GaussianRational> values_at(const std::vector<GaussianRational>& points,
                                          int eval_order) const;
  int degree_bound() const;
};

struct ConvergenceRow {
  std::string label;
  std::int64_t parameter = 0;
  std::int64_t vertex_count = 0;
  std::vector<Rational> nbar_normalized;      // [0..order]
  std::vector<Rational> coeff_deviation;      // |nbar_j - limit_j|, [0..order]
  std::vector<GaussianRational> zeta_values;  // per eval point, normalized zeta
  std::vector<Rational> z_deviation_sq;       // |z^|F| - L|^2, exact
  std::vector<double> z_deviation;            // sqrt of the above
};

struct ConvergenceReport {
  int order = 0;
  int eval_order = 0;
  int fundamental_domain_size = 1;
  std::vector<GaussianRational> eval_points;
  std::vector<Rational> limit_nbar;             // normalized per |F|
  std::vector<GaussianRational> limit_values;   // comparison targets L(u)
  std::vector<ConvergenceRow> rows;
  std::vector<Rational> sup_coeff_deviation;    // per column j
  std::vector<Rational> sup_z_deviation_sq;     // per eval point
};

// Evaluations use exact Gaussian-rational Horner on the order-eval_order
// normalized series; eval_order >= order. Every |u| must stay inside the
// holomorphy disc |u| < 1/(D-1) of all members and of the limit.
ConvergenceReport converge_run(const GraphSequence& members, int order,
                               const ConvergenceLimit& limit,
                               const std::vector<GaussianRational>& eval_points,
                               int eval_order = 0);

}  // namespace ihara
