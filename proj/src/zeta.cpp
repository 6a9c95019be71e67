#include "ihara/zeta.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

#include "ihara/paths.hpp"

namespace ihara {

Rational trace_identity(const Graph& g, MeasureMode mode) {
  return mode == MeasureMode::counting ? Rational(g.vertex_count()) : Rational(1);
}

namespace {

Rational mode_weight(const Graph& g, MeasureMode mode) {
  return mode == MeasureMode::counting ? Rational(1) : Rational(1, g.vertex_count());
}

}  // namespace

SeriesQ zeta_series_from_coefficients(const ZetaCoefficients& coeffs) {
  const int J = coeffs.order();
  SeriesQ log_z(J);
  for (int j = 1; j <= J; ++j) log_z[j] = coeffs.nbar[static_cast<std::size_t>(j)] / Rational(j);
  return series_exp(log_z);
}

ZetaCoefficients coefficients_by_paths(const Graph& g, int order, MeasureMode mode) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  ZetaCoefficients out;
  out.mode = mode;
  out.nbar.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  out.pbar.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int x = 0; x < g.vertex_count(); ++x) {
    const ClosedPathCounts census = count_closed_paths(g, x, order);
    for (int j = 1; j <= order; ++j) {
      out.nbar[static_cast<std::size_t>(j)] += census.reduced[static_cast<std::size_t>(j)];
      out.pbar[static_cast<std::size_t>(j)] += census.primitive[static_cast<std::size_t>(j)];
    }
  }
  const Rational w = mode_weight(g, mode);
  for (int j = 1; j <= order; ++j) {
    out.nbar[static_cast<std::size_t>(j)] *= w;
    out.pbar[static_cast<std::size_t>(j)] *= w;
  }
  return out;
}

IntMatrix IntMatrix::zero(int n) {
  IntMatrix m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m = zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (int i = 0; i < n; ++i) t += at(i, i);
  return t;
}

std::vector<IntMatrix> proper_path_matrices(const Graph& g, int order) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  const int n = g.vertex_count();
  const int D = g.max_degree();
  // per-entry counts stay below D(D-1)^(j-1); keep clear of int64 overflow
  if (D >= 2 && (order - 1) * std::log(static_cast<double>(D - 1)) + std::log(static_cast<double>(D)) >
                    std::log(4.0e18))
    throw std::invalid_argument("order too large for exact 64-bit path counts");

  std::vector<std::int64_t> q(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) q[static_cast<std::size_t>(v)] = g.degree(v) - 1;

  std::vector<IntMatrix> mats;
  mats.reserve(static_cast<std::size_t>(order) + 1);
  mats.push_back(IntMatrix::identity(n));
  if (order == 0) return mats;

  IntMatrix adjacency = IntMatrix::zero(n);
  for (int v = 0; v < n; ++v)
    for (VertexId w : g.neighbors(v)) adjacency.at(v, w) = 1;
  mats.push_back(adjacency);

  auto times_adjacency = [&](const IntMatrix& m) {
    IntMatrix r = IntMatrix::zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t acc = 0;
        for (VertexId w : g.neighbors(j)) acc += m.at(i, w);
        r.at(i, j) = acc;
      }
    return r;
  };

  if (order >= 2) {
    IntMatrix a2 = times_adjacency(mats[1]);
    for (int i = 0; i < n; ++i) a2.at(i, i) -= q[static_cast<std::size_t>(i)] + 1;
    mats.push_back(std::move(a2));
  }
  for (int j = 3; j <= order; ++j) {
    IntMatrix next = times_adjacency(mats[static_cast<std::size_t>(j - 1)]);
    const IntMatrix& prev = mats[static_cast<std::size_t>(j - 2)];
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) next.at(r, c) -= prev.at(r, c) * q[static_cast<std::size_t>(c)];
    mats.push_back(std::move(next));
  }
  return mats;
}

std::vector<Rational> tail_counts_by_recursion(const Graph& g, int order, MeasureMode mode) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  const auto mats = proper_path_matrices(g, std::max(0, order - 2));
  const Rational w = mode_weight(g, mode);
  std::vector<Rational> t(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int j = 3; j <= order; ++j) {
    // tau((Q - I) A_{j-2}) with Q - I = deg - 2 on the diagonal
    std::int64_t weighted = 0;
    const IntMatrix& m = mats[static_cast<std::size_t>(j - 2)];
    for (int v = 0; v < g.vertex_count(); ++v)
      weighted += static_cast<std::int64_t>(g.degree(v) - 2) * m.at(v, v);
    t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 2)] + Rational(weighted) * w;
  }
  return t;
}

ZetaCoefficients coefficients_by_trace(const Graph& g, int order, MeasureMode mode) {
  const auto mats = proper_path_matrices(g, order);
  const auto tails = tail_counts_by_recursion(g, order, mode);
  const Rational w = mode_weight(g, mode);
  ZetaCoefficients out;
  out.mode = mode;
  out.nbar.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int j = 1; j <= order; ++j)
    out.nbar[static_cast<std::size_t>(j)] =
        Rational(mats[static_cast<std::size_t>(j)].trace()) * w - tails[static_cast<std::size_t>(j)];
  return out;
}

Rational euler_characteristic(const Graph& g, MeasureMode mode) {
  std::int64_t doubled = 0;  // tau(I - Q) = sum (2 - deg)
  for (int v = 0; v < g.vertex_count(); ++v) doubled += 2 - g.degree(v);
  return Rational(doubled) * mode_weight(g, mode) / Rational(2);
}

SeriesQ det_formula_series(const Graph& g, int order, MeasureMode mode) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  const int n = g.vertex_count();

  // powers of X = uA - u^2 Q as a matrix of truncated series; only the traces
  // feed the log-determinant
  std::vector<SeriesQ> power(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), SeriesQ(order));
  auto at = [&](std::vector<SeriesQ>& m, int r, int c) -> SeriesQ& {
    return m[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)];
  };

  std::vector<Rational> q(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) q[static_cast<std::size_t>(v)] = Rational(g.degree(v) - 1);

  for (int r = 0; r < n; ++r) {
    for (VertexId w : g.neighbors(r)) at(power, r, w)[1] = Rational(1);
    at(power, r, r)[2] = -q[static_cast<std::size_t>(r)];
  }

  SeriesQ log_det_inverse(order);  // sum_k tau(X^k)/k
  const Rational w = mode_weight(g, mode);
  for (int k = 1; k <= order; ++k) {
    if (k > 1) {
      // right-multiply by X, exploiting that X has degree-2 sparse columns
      std::vector<SeriesQ> next(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), SeriesQ(order));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          SeriesQ acc(order);
          for (VertexId m : g.neighbors(c)) acc = acc + at(power, r, m);
          acc = acc.shifted(1);
          acc = acc - at(power, r, c).scaled(q[static_cast<std::size_t>(c)]).shifted(2);
          at(next, r, c) = std::move(acc);
        }
      power = std::move(next);
    }
    SeriesQ tr(order);
    for (int i = 0; i < n; ++i) tr = tr + at(power, i, i);
    log_det_inverse = log_det_inverse + tr.scaled(w / Rational(k));
  }

  const Rational chi = euler_characteristic(g, mode);
  SeriesQ one_minus_u2 = SeriesQ::constant(order, Rational(1));
  if (order >= 2) one_minus_u2[2] = Rational(-1);
  return series_pow(one_minus_u2, chi) * series_exp(log_det_inverse);
}

double operator_growth_rate(int degree_bound) {
  const double d = static_cast<double>(degree_bound);
  return (d + std::sqrt(d * d + 4.0 * d)) / 2.0;
}

namespace {

Eigen::MatrixXcd zeta_pencil(const Graph& g, std::complex<double> u) {
  const int n = g.vertex_count();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  const std::complex<double> u2 = u * u;
  for (int v = 0; v < n; ++v) {
    m(v, v) = 1.0 + u2 * static_cast<double>(g.degree(v) - 1);
    for (VertexId w : g.neighbors(v)) m(v, w) -= u;
  }
  return m;
}

void require_inside_determinant_disc(const Graph& g, std::complex<double> u) {
  const double r = operator_growth_rate(g.max_degree());
  if (r > 0.0 && std::abs(u) >= 1.0 / r)
    throw std::domain_error("evaluation point outside |u| < 1/R");
}

}  // namespace

std::complex<double> det_formula_eval(const Graph& g, std::complex<double> u, MeasureMode mode) {
  require_inside_determinant_disc(g, u);
  const std::complex<double> det = zeta_pencil(g, u).partialPivLu().determinant();
  if (det == std::complex<double>(0.0, 0.0))
    throw std::domain_error("zero of 1/Z: determinant vanishes at this point");

  const Rational chi = euler_characteristic(g, mode);
  // 1 - u^2 stays in the right half plane on the determinant disc
  const std::complex<double> log_pref = std::log(std::complex<double>(1.0, 0.0) - u * u);

  if (mode == MeasureMode::counting) {
    return std::exp(chi.get_d() * log_pref) / det;
  }

  const double inv_n = 1.0 / static_cast<double>(g.vertex_count());
  const std::complex<double> value = std::exp(chi.get_d() * log_pref - inv_n * std::log(det));

  // guard the principal branch of det^(1/|V|) against the exact series route
  const int guard_order = 24;
  const SeriesEval series_value =
      series_eval_zeta(to_complex(det_formula_series(g, guard_order, mode)), u,
                       ZetaTailParams{g.max_degree(), trace_identity(g, mode).get_d()});
  const double tolerance = series_value.tail_bound + 1e-6 * (1.0 + std::abs(series_value.value));
  if (std::abs(value - series_value.value) > tolerance)
    throw std::domain_error("branch ambiguity in normalized determinant evaluation");
  return value;
}

SeriesQ euler_product_series(const Graph& g, int order, MeasureMode mode) {
  const ZetaCoefficients coeffs = coefficients_by_paths(g, order, mode);
  SeriesQ product = SeriesQ::constant(order, Rational(1));
  for (int j = 1; j <= order; ++j) {
    const Rational exponent = coeffs.pbar[static_cast<std::size_t>(j)] / Rational(j);
    if (exponent == 0) continue;
    SeriesQ factor = SeriesQ::constant(order, Rational(1));
    factor[j] = Rational(-1);  // 1 - u^j
    if (mode == MeasureMode::counting) {
      if (!is_integer(exponent))
        throw std::logic_error("prime cycle count inconsistency: non-integral exponent at length " +
                               std::to_string(j));
      product = product * series_pow(factor, -exponent.get_num().get_si());
    } else {
      product = product * series_pow(factor, Rational(-exponent));
    }
  }
  return product;
}

std::complex<double> regular_spectral_eval(const Graph& g, std::complex<double> u, MeasureMode mode) {
  int degree = 0;
  if (!g.is_regular(&degree))
    throw std::invalid_argument("spectral formula requires a regular graph");
  require_inside_determinant_disc(g, u);

  const int n = g.vertex_count();
  const double r = static_cast<double>(degree - 1);
  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v)
    for (VertexId w : g.neighbors(v)) adjacency(v, w) = 1.0;
  const Eigen::VectorXd spectrum = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(adjacency).eigenvalues();

  const double slack = 1e-9 * (degree + 1);
  for (int i = 0; i < n; ++i)
    if (spectrum(i) < -(r + 1) - slack || spectrum(i) > (r + 1) + slack)
      throw std::domain_error("adjacency spectrum escapes [-(r+1), r+1]");

  const double tau1 = trace_identity(g, mode).get_d();
  const double weight = mode == MeasureMode::counting ? 1.0 : 1.0 / n;

  auto principal_log = [](std::complex<double> z) {
    if (z.real() <= 0.0 && std::abs(z.imag()) < 1e-14 * (1.0 + std::abs(z.real())))
      throw std::domain_error("argument left the slit plane");
    return std::log(z);
  };

  std::complex<double> exponent = -(r - 1.0) * tau1 / 2.0 *
                                  principal_log(std::complex<double>(1.0, 0.0) - u * u);
  for (int i = 0; i < n; ++i)
    exponent -= weight * principal_log(1.0 - u * spectrum(i) + r * u * u);
  return std::exp(exponent);
}

bool BIdentityReport::all() const {
  for (std::size_t j = 1; j < holds.size(); ++j)
    if (!holds[j]) return false;
  return true;
}

BIdentityReport b_identity_check(const Graph& g, int order, MeasureMode mode) {
  const auto mats = proper_path_matrices(g, order);
  const ZetaCoefficients reference = coefficients_by_paths(g, order, mode);
  const Rational w = mode_weight(g, mode);

  std::int64_t q_minus_i_trace = 0;
  for (int v = 0; v < g.vertex_count(); ++v) q_minus_i_trace += g.degree(v) - 2;

  BIdentityReport report;
  report.holds.assign(static_cast<std::size_t>(order) + 1, true);
  for (int j = 1; j <= order; ++j) {
    // tau(B_j) = tau(A_j) - sum_x (deg - 2) sum_{i=1..floor(j/2)} A_{j-2i}(x,x)
    std::int64_t discount = 0;
    for (int i = 1; 2 * i <= j; ++i) {
      const IntMatrix& m = mats[static_cast<std::size_t>(j - 2 * i)];
      for (int v = 0; v < g.vertex_count(); ++v)
        discount += static_cast<std::int64_t>(g.degree(v) - 2) * m.at(v, v);
    }
    const Rational lhs = Rational(mats[static_cast<std::size_t>(j)].trace() - discount) * w;
    Rational rhs = reference.nbar[static_cast<std::size_t>(j)];
    if (j % 2 == 0) rhs -= Rational(q_minus_i_trace) * w;
    report.holds[static_cast<std::size_t>(j)] = (lhs == rhs);
  }
  return report;
}

}  // namespace ihara
