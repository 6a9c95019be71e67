#include "doctest.h"

#include "ihara/generators.hpp"
#include "ihara/limits.hpp"
#include "ihara/rng.hpp"

using namespace ihara;

TEST_CASE("ball distribution of transitive and path graphs") {
  const BallDistribution c6 = ball_distribution(cycle_graph(6), 1);
  CHECK(c6.frequencies().size() == 1);
  CHECK(c6.frequencies().begin()->second == 1);
  CHECK(c6.total() == 1);

  const BallDistribution p4 = ball_distribution(path_graph(4), 1);
  CHECK(p4.frequencies().size() == 2);  // endpoint and interior classes
  for (const auto& [key, f] : p4.frequencies()) CHECK(f == Rational(1, 2));

  const BallDistribution point = ball_distribution(triangle_with_pendant(), 0);
  CHECK(point.frequencies().size() == 1);
  CHECK(point.frequencies().begin()->second == 1);
}

TEST_CASE("nj_of_class needs enough radius") {
  const PeriodicBall<ZVec> wide = unfold(lattice_voltage_graph(2), 0, 3);
  CHECK(nj_of_class(wide.ball, 4) == 8);

  const PeriodicBall<ZVec> narrow = unfold(lattice_voltage_graph(2), 0, 2);
  CHECK_THROWS_WITH_AS(nj_of_class(narrow.ball, 4),
                       "ball radius 2 too small for length 4: need radius >= 3",
                       std::invalid_argument);

  const RootedBall tree = ball(path_graph(9), 4, 4);
  CHECK(nj_of_class(tree, 4) == 0);
}

TEST_CASE("limit coefficients agree with the direct route on finite graphs") {
  Rng rng(97);
  const int order = 6;
  const int radius = (order + 1) / 2 + 1;
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = random_connected_graph(4, 10, 4, rng);
    const ZetaCoefficients via_distribution =
        limit_coefficients(ball_distribution(g, radius), order);
    const ZetaCoefficients direct = coefficients_by_paths(g, order, MeasureMode::normalized);
    CHECK(via_distribution.nbar == direct.nbar);
  }
}

TEST_CASE("limit coefficients reject a too-small radius") {
  const BallDistribution d = ball_distribution(cycle_graph(8), 2);
  CHECK_THROWS_AS(limit_coefficients(d, 6), std::invalid_argument);
}

TEST_CASE("torus distribution reproduces lattice coefficients") {
  const int order = 6;
  const int radius = (order + 1) / 2 + 1;
  const BallDistribution d = ball_distribution(torus_graph(order + 4, 2), radius);
  CHECK(d.frequencies().size() == 1);  // transitive
  const ZetaCoefficients from_torus = limit_coefficients(d, order);
  const ZetaCoefficients from_lattice = periodic_coefficients(lattice_voltage_graph(2), order);
  for (int j = 1; j <= order; ++j)
    CHECK(from_torus.nbar[static_cast<std::size_t>(j)] ==
          from_lattice.nbar[static_cast<std::size_t>(j)]);
}

TEST_CASE("distribution distance") {
  const BallDistribution a = ball_distribution(cycle_graph(12), 1);
  const BallDistribution b = ball_distribution(cycle_graph(24), 1);
  CHECK(distribution_distance(a, a) == 0);
  CHECK(distribution_distance(a, b) == 0);  // long cycles look alike at radius 1

  const BallDistribution p = ball_distribution(path_graph(2), 1);
  const BallDistribution q = ball_distribution(cycle_graph(5), 1);
  CHECK(distribution_distance(p, q) == 1);  // disjoint supports

  CHECK_THROWS_AS(distribution_distance(a, ball_distribution(cycle_graph(12), 2)),
                  std::invalid_argument);
}

TEST_CASE("total variation lies in [0,1] and triangle inequality holds") {
  Rng rng(103);
  std::vector<BallDistribution> dists;
  for (int trial = 0; trial < 5; ++trial)
    dists.push_back(ball_distribution(random_connected_graph(4, 10, 3, rng), 2));
  for (const auto& d : dists) CHECK(d.total() == 1);  // frequencies sum to one exactly
  for (const auto& p : dists)
    for (const auto& q : dists) {
      const Rational d = distribution_distance(p, q);
      CHECK(d >= 0);
      CHECK(d <= 1);
      for (const auto& r : dists)
        CHECK(distribution_distance(p, q) <=
              distribution_distance(p, r) + distribution_distance(r, q));
    }
}

TEST_CASE("coarsening matches the directly computed distribution") {
  Rng rng(107);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = random_connected_graph(4, 10, 4, rng);
    const BallDistribution fine = ball_distribution(g, 3);
    for (int r = 0; r <= 3; ++r) {
      const BallDistribution direct = ball_distribution(g, r);
      CHECK(distribution_distance(coarsen(fine, r), direct) == 0);
    }
  }
}

TEST_CASE("cycle family converges to the line") {
  const ConvergenceLimit limit{AnyVoltageGraph{lattice_voltage_graph(1)}};
  const std::vector<GaussianRational> points{GaussianRational(Rational(1, 2), Rational(0))};
  const ConvergenceReport report =
      converge_run(make_cycle_family(4, 24, 4), 8, limit, points, 32);

  CHECK(report.fundamental_domain_size == 1);
  for (const auto& row : report.rows) {
    // no reduced closed paths shorter than the girth
    for (int j = 1; j <= 8 && j < row.parameter; ++j)
      CHECK(row.coeff_deviation[static_cast<std::size_t>(j)] == 0);
  }
  // |Z_n(1/2) - 1| strictly decreasing along the family
  for (std::size_t i = 1; i < report.rows.size(); ++i)
    CHECK(report.rows[i].z_deviation_sq[0] < report.rows[i - 1].z_deviation_sq[0]);
  // the limit value is 1 (the line is a tree)
  CHECK(report.limit_values[0] == GaussianRational(Rational(1), Rational(0)));
}

TEST_CASE("torus family coefficients hit the lattice exactly once local") {
  const ConvergenceLimit limit{AnyVoltageGraph{lattice_voltage_graph(2)}};
  const ConvergenceReport report =
      converge_run(make_torus_family(4, 10, 2), 6, limit, {}, 6);
  for (const auto& row : report.rows)
    for (int j = 1; j <= 6; ++j)
      if (row.parameter >= j + 2)
        CHECK(row.coeff_deviation[static_cast<std::size_t>(j)] == 0);
}

TEST_CASE("evaluation at zero is exact") {
  const ConvergenceLimit limit{AnyVoltageGraph{lattice_voltage_graph(1)}};
  const std::vector<GaussianRational> points{GaussianRational()};
  const ConvergenceReport report = converge_run(make_cycle_family(4, 8), 4, limit, points, 8);
  for (const auto& row : report.rows) {
    CHECK(row.zeta_values[0] == GaussianRational(Rational(1), Rational(0)));
    CHECK(row.z_deviation_sq[0] == 0);
  }
}

TEST_CASE("eval points outside the disc are rejected") {
  const ConvergenceLimit limit{AnyVoltageGraph{lattice_voltage_graph(2)}};
  const std::vector<GaussianRational> points{GaussianRational(Rational(1, 2), Rational(0))};
  // D = 4 for the grid: need |u| < 1/3
  CHECK_THROWS_AS(converge_run(make_torus_family(4, 6, 2), 4, limit, points, 4),
                  std::domain_error);
}

TEST_CASE("distribution limits plug into the runner") {
  const int order = 4;
  const int radius = (order + 1) / 2 + 1;
  const ConvergenceLimit limit{ball_distribution(torus_graph(8, 2), radius)};
  const ConvergenceReport report = converge_run(make_torus_family(6, 8), order, limit, {}, order);
  for (const auto& row : report.rows)
    for (int j = 1; j <= order; ++j)
      if (row.parameter >= j + 2)
        CHECK(row.coeff_deviation[static_cast<std::size_t>(j)] == 0);
}
