#include "doctest.h"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <complex>

#include "ihara/generators.hpp"
#include "ihara/paths.hpp"
#include "ihara/rng.hpp"
#include "ihara/zeta.hpp"

using namespace ihara;

namespace {

std::vector<std::complex<double>> sample_points(const Graph& g, int count, Rng& rng) {
  const double limit = 1.0 / operator_growth_rate(g.max_degree());
  std::vector<std::complex<double>> points;
  for (int k = 0; k < count; ++k) {
    const double radius = limit * (0.15 + 0.7 * rng.unit());
    const double angle = 2.0 * M_PI * rng.unit();
    points.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
  }
  return points;
}

}  // namespace

TEST_CASE("triangle coefficients by brute force") {
  const Graph c3 = cycle_graph(3);
  const ZetaCoefficients counting = coefficients_by_paths(c3, 6, MeasureMode::counting);
  CHECK(counting.nbar == std::vector<Rational>{0, 0, 0, 6, 0, 0, 6});
  const ZetaCoefficients normalized = coefficients_by_paths(c3, 6, MeasureMode::normalized);
  CHECK(normalized.nbar == std::vector<Rational>{0, 0, 0, 2, 0, 0, 2});
}

TEST_CASE("proper path matrices match the brute-force oracle") {
  Rng rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = random_connected_graph(3, 8, 4, rng);
    const auto mats = proper_path_matrices(g, 6);
    CHECK(mats[0].trace() == g.vertex_count());  // identity
    for (int j = 1; j <= 6; ++j)
      for (int p = 0; p < g.vertex_count(); ++p)
        for (int q = 0; q < g.vertex_count(); ++q)
          CHECK(mats[static_cast<std::size_t>(j)].at(p, q) == count_proper_paths(g, p, q, j));
  }
}

TEST_CASE("triangle traces") {
  const auto mats = proper_path_matrices(cycle_graph(3), 3);
  CHECK(mats[2].trace() == 0);
  CHECK(mats[3].trace() == 6);
}

TEST_CASE("spectral norm of A_j stays below R^j") {
  Rng rng(43);
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = random_connected_graph(3, 9, 4, rng);
    const double growth = operator_growth_rate(g.max_degree());
    const auto mats = proper_path_matrices(g, 8);
    for (int j = 0; j <= 8; ++j) {
      Eigen::MatrixXd m(g.vertex_count(), g.vertex_count());
      for (int p = 0; p < g.vertex_count(); ++p)
        for (int q = 0; q < g.vertex_count(); ++q)
          m(p, q) = static_cast<double>(mats[static_cast<std::size_t>(j)].at(p, q));
      const double norm = m.jacobiSvd().singularValues()(0);
      CHECK(norm <= std::pow(growth, j) * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("tail counts: recursion equals brute force") {
  Rng rng(47);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = random_connected_graph(3, 9, 4, rng);
    const auto tails = tail_counts_by_recursion(g, 9, MeasureMode::counting);
    CHECK(tails[1] == 0);
    CHECK(tails[2] == 0);
    for (int j = 1; j <= 9; ++j) {
      std::int64_t brute = 0;
      for (int x = 0; x < g.vertex_count(); ++x) brute += count_tailed(g, x, j);
      CHECK(tails[static_cast<std::size_t>(j)] == Rational(brute));
    }
  }
}

TEST_CASE("triangle has no tails (Q = I)") {
  const auto tails = tail_counts_by_recursion(cycle_graph(3), 8, MeasureMode::counting);
  for (int j = 1; j <= 8; ++j) CHECK(tails[static_cast<std::size_t>(j)] == 0);
}

TEST_CASE("trace route equals path route exactly") {
  Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_connected_graph(3, 10, 4, rng);
    for (const MeasureMode mode : {MeasureMode::counting, MeasureMode::normalized})
      CHECK(coefficients_by_trace(g, 10, mode).nbar == coefficients_by_paths(g, 10, mode).nbar);
  }
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(cycle_graph(3), MeasureMode::counting) == 0);
  CHECK(euler_characteristic(path_graph(3), MeasureMode::counting) == 1);
  CHECK(euler_characteristic(complete_graph(4), MeasureMode::counting) == -2);
  CHECK(euler_characteristic(complete_graph(4), MeasureMode::normalized) == Rational(-1, 2));
}

TEST_CASE("determinant series of the triangle is (1-u^3)^-2") {
  const SeriesQ z = det_formula_series(cycle_graph(3), 12, MeasureMode::counting);
  for (int j = 0; j <= 12; ++j) {
    if (j % 3 == 0)
      CHECK(z[j] == Rational(j / 3 + 1));
    else
      CHECK(z[j] == 0);
  }
}

TEST_CASE("determinant series equals the exponential of path counts") {
  Rng rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_connected_graph(3, 10, 4, rng);
    for (const MeasureMode mode : {MeasureMode::counting, MeasureMode::normalized}) {
      const SeriesQ via_det = det_formula_series(g, 12, mode);
      const SeriesQ via_paths = zeta_series_from_coefficients(coefficients_by_paths(g, 12, mode));
      CHECK(via_det == via_paths);
      CHECK(via_det[0] == 1);
    }
  }
}

TEST_CASE("euler product equals the exponential form") {
  Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_connected_graph(3, 10, 4, rng);
    for (const MeasureMode mode : {MeasureMode::counting, MeasureMode::normalized})
      CHECK(euler_product_series(g, 9, mode) ==
            zeta_series_from_coefficients(coefficients_by_paths(g, 9, mode)));
  }
  CHECK(euler_product_series(path_graph(5), 9, MeasureMode::counting) ==
        SeriesQ::constant(9, Rational(1)));
  // triangle: a single prime length 3 with multiplicity 2
  const SeriesQ c3 = euler_product_series(cycle_graph(3), 7, MeasureMode::counting);
  CHECK(c3[3] == 2);
  CHECK(c3[6] == 3);
  CHECK(c3[7] == 0);
}

TEST_CASE("normalization law: counting = normalized^|V|") {
  Rng rng(67);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = random_connected_graph(3, 10, 4, rng);
    const SeriesQ counting = det_formula_series(g, 12, MeasureMode::counting);
    const SeriesQ normalized = det_formula_series(g, 12, MeasureMode::normalized);
    CHECK(series_pow(normalized, static_cast<long>(g.vertex_count())) == counting);
  }
}

TEST_CASE("b identities hold exactly") {
  CHECK(b_identity_check(cycle_graph(3), 8, MeasureMode::counting).all());
  CHECK(b_identity_check(complete_graph(4), 8, MeasureMode::counting).all());
  CHECK(b_identity_check(path_graph(5), 8, MeasureMode::counting).all());
  Rng rng(71);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = random_connected_graph(3, 10, 4, rng);
    CHECK(b_identity_check(g, 12, MeasureMode::counting).all());
    CHECK(b_identity_check(g, 12, MeasureMode::normalized).all());
  }
}

TEST_CASE("determinant evaluation at points") {
  const Graph c3 = cycle_graph(3);
  CHECK(std::abs(det_formula_eval(c3, {0.0, 0.0}, MeasureMode::counting) - 1.0) < 1e-14);
  const std::complex<double> at = det_formula_eval(c3, {0.2, 0.0}, MeasureMode::counting);
  CHECK(std::abs(at - std::pow(1.0 - 0.008, -2.0)) < 1e-10);

  const double limit = 1.0 / operator_growth_rate(2);
  CHECK_THROWS_AS(det_formula_eval(c3, {limit + 0.01, 0.0}, MeasureMode::counting),
                  std::domain_error);
}

TEST_CASE("determinant evaluation agrees with the series within its tail bound") {
  Rng rng(73);
  for (int trial = 0; trial < 4; ++trial) {
    const Graph g = random_connected_graph(3, 8, 3, rng);
    const SeriesC z = to_complex(det_formula_series(g, 24, MeasureMode::counting));
    const ZetaTailParams tail{g.max_degree(),
                              trace_identity(g, MeasureMode::counting).get_d()};
    for (const auto& u : sample_points(g, 5, rng)) {
      const SeriesEval series_value = series_eval_zeta(z, u, tail);
      const std::complex<double> lu = det_formula_eval(g, u, MeasureMode::counting);
      CHECK(std::abs(lu - series_value.value) <=
            series_value.tail_bound + 1e-9 * (1.0 + std::abs(lu)));
    }
  }
}

TEST_CASE("normalized determinant evaluation matches the series route") {
  const Graph g = complete_graph(4);
  Rng rng(79);
  const SeriesC z = to_complex(det_formula_series(g, 24, MeasureMode::normalized));
  for (const auto& u : sample_points(g, 6, rng)) {
    const std::complex<double> value = det_formula_eval(g, u, MeasureMode::normalized);
    const SeriesEval series_value =
        series_eval_zeta(z, u, ZetaTailParams{g.max_degree(), 1.0});
    CHECK(std::abs(value - series_value.value) <= series_value.tail_bound + 1e-8);
  }
}

TEST_CASE("spectral formula on the triangle") {
  // eigenvalues {2, -1, -1}, r = 1: the product collapses to (1-u^3)^-2
  const Graph c3 = cycle_graph(3);
  Rng rng(83);
  for (const auto& u : sample_points(c3, 8, rng)) {
    const std::complex<double> spectral = regular_spectral_eval(c3, u, MeasureMode::counting);
    const std::complex<double> closed = std::pow(1.0 - u * u * u, -2.0);
    CHECK(std::abs(spectral - closed) <= 1e-12 * (1.0 + std::abs(closed)));
  }
  CHECK(std::abs(regular_spectral_eval(c3, {0.0, 0.0}, MeasureMode::counting) - 1.0) < 1e-14);
}

TEST_CASE("spectral route agrees with the determinant route on regular graphs") {
  Rng rng(89);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = random_regular_graph(16, 3, rng);
    for (const MeasureMode mode : {MeasureMode::counting, MeasureMode::normalized})
      for (const auto& u : sample_points(g, 6, rng)) {
        const std::complex<double> spectral = regular_spectral_eval(g, u, mode);
        const std::complex<double> det = det_formula_eval(g, u, mode);
        CHECK(std::abs(spectral - det) <= 1e-9 * std::abs(det));
      }
  }
}

TEST_CASE("spectral route rejects irregular graphs") {
  CHECK_THROWS_AS(regular_spectral_eval(path_graph(4), {0.1, 0.0}, MeasureMode::counting),
                  std::invalid_argument);
}

TEST_CASE("isolated vertices are handled exactly") {
  // two isolated vertices next to an edge: Q has -1 entries there
  const Graph g = Graph::from_edges(4, {{0, 1}});
  const SeriesQ z = det_formula_series(g, 8, MeasureMode::counting);
  CHECK(z == SeriesQ::constant(8, Rational(1)));  // no closed paths anywhere
  CHECK(euler_characteristic(g, MeasureMode::counting) == 3);
}
