#include "ihara/limits.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ihara/generators.hpp"
#include "ihara/paths.hpp"

namespace ihara {

BallDistribution::BallDistribution(int radius, int degree_bound)
    : radius_(radius), degree_bound_(degree_bound) {
  if (radius < 0) throw std::invalid_argument("negative distribution radius");
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
}

const RootedBall& BallDistribution::representative(const BallClassKey& key) const {
  const auto it = rep_.find(key);
  if (it == rep_.end()) throw std::invalid_argument("unknown ball class key");
  return it->second;
}

Rational BallDistribution::frequency(const BallClassKey& key) const {
  const auto it = freq_.find(key);
  return it == freq_.end() ? Rational(0) : it->second;
}

Rational BallDistribution::total() const {
  Rational t(0);
  for (const auto& [key, f] : freq_) t += f;
  return t;
}

void BallDistribution::add_class(const BallClassKey& key, const Rational& weight,
                                 RootedBall representative) {
  if (weight < 0) throw std::invalid_argument("negative class frequency");
  freq_[key] += weight;
  rep_.emplace(key, std::move(representative));
}

BallDistribution ball_distribution(const Graph& g, int radius) {
  BallDistribution d(radius, g.max_degree());
  const Rational share(1, g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    RootedBall b = ball(g, v, radius);
    const BallClassKey key = canonical_key(b);
    d.add_class(key, share, std::move(b));
  }
  return d;
}

std::int64_t nj_of_class(const RootedBall& b, int length) {
  if (length < 1) throw std::invalid_argument("length must be >= 1");
  const int required = (length + 1) / 2 + 1;
  if (b.radius < required)
    throw std::invalid_argument("ball radius " + std::to_string(b.radius) +
                                " too small for length " + std::to_string(length) +
                                ": need radius >= " + std::to_string(required));
  return count_closed_paths(b.graph, b.root, length).reduced[static_cast<std::size_t>(length)];
}

ZetaCoefficients limit_coefficients(const BallDistribution& d, int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  const int required = (order + 1) / 2 + 1;
  if (d.radius() < required)
    throw std::invalid_argument("distribution radius " + std::to_string(d.radius()) +
                                " too small for order " + std::to_string(order) +
                                ": need radius >= " + std::to_string(required));
  ZetaCoefficients out;
  out.mode = MeasureMode::normalized;
  out.nbar.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  for (const auto& [key, p] : d.frequencies()) {
    const RootedBall& rep = d.representative(key);
    const ClosedPathCounts census = count_closed_paths(rep.graph, rep.root, order);
    for (int j = 1; j <= order; ++j)
      out.nbar[static_cast<std::size_t>(j)] +=
          p * Rational(census.reduced[static_cast<std::size_t>(j)]);
  }
  return out;
}

Rational distribution_distance(const BallDistribution& p, const BallDistribution& q) {
  if (p.radius() != q.radius())
    throw std::invalid_argument("distribution radii differ: " + std::to_string(p.radius()) +
                                " vs " + std::to_string(q.radius()));
  std::set<BallClassKey> keys;
  for (const auto& [key, f] : p.frequencies()) keys.insert(key);
  for (const auto& [key, f] : q.frequencies()) keys.insert(key);
  Rational sum(0);
  for (const auto& key : keys) sum += rational_abs(Rational(p.frequency(key) - q.frequency(key)));
  return Rational(sum / 2);
}

BallDistribution coarsen(const BallDistribution& d, int radius) {
  if (radius > d.radius()) throw std::invalid_argument("coarsening radius exceeds stored radius");
  BallDistribution out(radius, d.degree_bound());
  for (const auto& [key, f] : d.frequencies()) {
    const RootedBall& rep = d.representative(key);
    RootedBall shrunk = ball(rep.graph, rep.root, radius);
    const BallClassKey coarse_key = canonical_key(shrunk);
    out.add_class(coarse_key, f, std::move(shrunk));
  }
  return out;
}

GraphSequence make_cycle_family(int from, int to, int step) {
  if (from < 3 || to < from || step < 1) throw std::invalid_argument("bad cycle family range");
  GraphSequence seq;
  for (int n = from; n <= to; n += step)
    seq.push_back({"cycle(" + std::to_string(n) + ")", n, cycle_graph(n)});
  return seq;
}

GraphSequence make_torus_family(int from, int to, int step, int dim) {
  if (from < 3 || to < from || step < 1) throw std::invalid_argument("bad torus family range");
  GraphSequence seq;
  for (int n = from; n <= to; n += step)
    seq.push_back({"torus" + std::to_string(dim) + "(" + std::to_string(n) + ")", n,
                   torus_graph(n, dim)});
  return seq;
}

int ConvergenceLimit::fundamental_domain_size() const {
  if (const auto* vg = std::get_if<AnyVoltageGraph>(&target))
    return std::visit([](const auto& v) { return v.base_vertex_count(); }, *vg);
  return 1;
}

std::vector<Rational> ConvergenceLimit::normalized_nbar(int order) const {
  if (const auto* vg = std::get_if<AnyVoltageGraph>(&target)) {
    return std::visit(
        [&](const auto& v) {
          ZetaCoefficients coeffs = periodic_coefficients(v, order);
          std::vector<Rational> out = coeffs.nbar;
          const Rational f(v.base_vertex_count());
          for (auto& c : out) c /= f;
          return out;
        },
        *vg);
  }
  return limit_coefficients(std::get<BallDistribution>(target), order).nbar;
}

std::vector<GaussianRational> ConvergenceLimit::values_at(
    const std::vector<GaussianRational>& points, int eval_order) const {
  SeriesQ series = SeriesQ::constant(eval_order, Rational(1));
  if (const auto* vg = std::get_if<AnyVoltageGraph>(&target)) {
    series = std::visit([&](const auto& v) { return periodic_zeta_series(v, eval_order); }, *vg);
  } else {
    series = zeta_series_from_coefficients(
        limit_coefficients(std::get<BallDistribution>(target), eval_order));
  }
  std::vector<GaussianRational> out;
  out.reserve(points.size());
  for (const auto& u : points) out.push_back(series_eval_exact(series, u));
  return out;
}

int ConvergenceLimit::degree_bound() const {
  if (const auto* vg = std::get_if<AnyVoltageGraph>(&target))
    return std::visit([](const auto& v) { return v.cover_degree_bound(); }, *vg);
  return std::get<BallDistribution>(target).degree_bound();
}

ConvergenceReport converge_run(const GraphSequence& members, int order,
                               const ConvergenceLimit& limit,
                               const std::vector<GaussianRational>& eval_points,
                               int eval_order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (eval_order < order) eval_order = order;

  int degree_bound = limit.degree_bound();
  for (const auto& m : members) degree_bound = std::max(degree_bound, m.graph.max_degree());
  if (degree_bound > 1) {
    const Rational disc(1, degree_bound - 1);
    const Rational disc_sq = disc * disc;
    for (const auto& u : eval_points)
      if (!(u.norm2() < disc_sq))
        throw std::domain_error("evaluation point outside |u| < 1/(D-1) with D = " +
                                std::to_string(degree_bound));
  }

  ConvergenceReport report;
  report.order = order;
  report.eval_order = eval_order;
  report.fundamental_domain_size = limit.fundamental_domain_size();
  report.eval_points = eval_points;
  report.limit_nbar = limit.normalized_nbar(order);
  if (!eval_points.empty()) report.limit_values = limit.values_at(eval_points, eval_order);

  report.sup_coeff_deviation.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  report.sup_z_deviation_sq.assign(eval_points.size(), Rational(0));

  const long domain_size = report.fundamental_domain_size;
  for (const auto& member : members) {
    ConvergenceRow row;
    row.label = member.label;
    row.parameter = member.parameter;
    row.vertex_count = member.graph.vertex_count();

    const int coeff_order = eval_points.empty() ? order : eval_order;
    const ZetaCoefficients coeffs =
        coefficients_by_paths(member.graph, coeff_order, MeasureMode::normalized);
    row.nbar_normalized.assign(coeffs.nbar.begin(),
                               coeffs.nbar.begin() + order + 1);

    row.coeff_deviation.assign(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int j = 1; j <= order; ++j) {
      row.coeff_deviation[static_cast<std::size_t>(j)] = rational_abs(
          Rational(row.nbar_normalized[static_cast<std::size_t>(j)] -
                   report.limit_nbar[static_cast<std::size_t>(j)]));
      if (row.coeff_deviation[static_cast<std::size_t>(j)] >
          report.sup_coeff_deviation[static_cast<std::size_t>(j)])
        report.sup_coeff_deviation[static_cast<std::size_t>(j)] =
            row.coeff_deviation[static_cast<std::size_t>(j)];
    }

    if (!eval_points.empty()) {
      ZetaCoefficients full = coeffs;
      SeriesQ series = zeta_series_from_coefficients(full);
      for (std::size_t k = 0; k < eval_points.size(); ++k) {
        const GaussianRational z = series_eval_exact(series, eval_points[k]);
        row.zeta_values.push_back(z);
        const GaussianRational compared = z.pow(domain_size);
        const Rational dev_sq = (compared - report.limit_values[k]).norm2();
        row.z_deviation_sq.push_back(dev_sq);
        row.z_deviation.push_back(std::sqrt(dev_sq.get_d()));
        if (dev_sq > report.sup_z_deviation_sq[k]) report.sup_z_deviation_sq[k] = dev_sq;
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace ihara
