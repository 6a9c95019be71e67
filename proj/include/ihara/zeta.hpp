#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ihara/graph.hpp"
#include "ihara/rational.hpp"
#include "ihara/series.hpp"

namespace ihara {

// counting: the trace is the plain matrix trace and every vertex has mass 1.
// normalized: trace and masses are divided by |V|.
enum class MeasureMode { counting, normalized };

Rational trace_identity(const Graph& g, MeasureMode mode);  // tau(1)

struct ZetaCoefficients {
  MeasureMode mode = MeasureMode::counting;
  std::vector<Rational> nbar;  // index j; [0] unused
  std::vector<Rational> pbar;  // empty when primitive counts were not requested
  int order() const { return static_cast<int>(nbar.size()) - 1; }
};

// exp(sum_j nbar_j u^j / j)
SeriesQ zeta_series_from_coefficients(const ZetaCoefficients& coeffs);

// brute-force route: per-vertex census summed (and normalized per mode)
ZetaCoefficients coefficients_by_paths(const Graph& g, int order, MeasureMode mode);

// Square integer matrix, row-major, just enough for the trace recursion.
struct IntMatrix {
  int n = 0;
  std::vector<std::int64_t> a;

  static IntMatrix zero(int n);
  static IntMatrix identity(int n);
  std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)]; }
  std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)]; }
  std::int64_t trace() const;
};

// A_0 = I, A_1 = A, A_2 = A^2 - Q - I, A_j = A_{j-1} A - A_{j-2} Q with
// Q = Deg - I; entry (p,q) of A_j counts proper paths of length j from p to q.
std::vector<IntMatrix> proper_path_matrices(const Graph& g, int order);

// t_1 = t_2 = 0, t_j = t_{j-2} + tau((Q - I) A_{j-2}); entry [0] unused
std::vector<Rational> tail_counts_by_recursion(const Graph& g, int order, MeasureMode mode);

// nbar_j = tau(A_j) - t_j
ZetaCoefficients coefficients_by_trace(const Graph& g, int order, MeasureMode mode);

// chi = tau(I - Q)/2; equals |V| - |E| in counting mode
Rational euler_characteristic(const Graph& g, MeasureMode mode);

// Z as a truncated series from the determinant identity, exactly:
// log det_tau(I - X) = -sum_k tau(X^k)/k with X = uA - u^2 Q, then
// Z = (1 - u^2)^chi exp(sum_k tau(X^k)/k).
SeriesQ det_formula_series(const Graph& g, int order, MeasureMode mode);

// Numeric route via dense LU; |u| < 1/R with R = (D + sqrt(D^2+4D))/2.
// Normalized mode takes det^(1/|V|) on the principal branch and cross-checks
// against the series route, rejecting the point on branch ambiguity.
std::complex<double> det_formula_eval(const Graph& g, std::complex<double> u, MeasureMode mode);

// prod_j (1 - u^j)^(-pbar_j / j); exponents are integral in counting mode
SeriesQ euler_product_series(const Graph& g, int order, MeasureMode mode);

// (r+1)-regular graphs only: Z via the adjacency spectrum,
// Z = (1-u^2)^(-(r-1)tau(1)/2) prod_lambda (1 - u lambda + r u^2)^(-w).
std::complex<double> regular_spectral_eval(const Graph& g, std::complex<double> u, MeasureMode mode);

struct BIdentityReport {
  std::vector<bool> holds;  // index j; [0] unused
  bool all() const;
};

// tau(B_j) = nbar_j - tau(Q - I) for even j and nbar_j for odd j, where
// B_j = A_j - (Q - I) sum_{i=1..floor(j/2)} A_{j-2i}
BIdentityReport b_identity_check(const Graph& g, int order, MeasureMode mode);

// R = (D + sqrt(D^2 + 4D))/2; determinant and spectral routes are valid for
// |u| < 1/R
double operator_growth_rate(int degree_bound);

}  // namespace ihara
