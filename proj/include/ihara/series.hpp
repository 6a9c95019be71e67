#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ihara/rational.hpp"

namespace ihara {

// Formal power series in one variable truncated at a fixed order: coefficients
// for u^0..u^order. The coefficient type fixes the arithmetic mode; the exact
// (Rational) and floating (complex<double>) instantiations cannot mix, and all
// binary operations insist on equal truncation orders.
template <class Coeff>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order)
      : coeff_(static_cast<std::size_t>(check_order(order)) + 1, Coeff(0)) {}

  TruncatedSeries(int order, std::vector<Coeff> coeffs) : coeff_(std::move(coeffs)) {
    check_order(order);
    if (static_cast<int>(coeff_.size()) != order + 1)
      throw std::invalid_argument("coefficient count does not match order");
  }

  static TruncatedSeries constant(int order, Coeff value) {
    TruncatedSeries s(order);
    s.coeff_[0] = std::move(value);
    return s;
  }

  static TruncatedSeries monomial(int order, int degree, Coeff value) {
    TruncatedSeries s(order);
    if (degree < 0 || degree > order) throw std::invalid_argument("monomial degree out of range");
    s.coeff_[static_cast<std::size_t>(degree)] = std::move(value);
    return s;
  }

  int order() const { return static_cast<int>(coeff_.size()) - 1; }

  const Coeff& operator[](int degree) const { return coeff_[index(degree)]; }
  Coeff& operator[](int degree) { return coeff_[index(degree)]; }

  bool operator==(const TruncatedSeries& o) const { return coeff_ == o.coeff_; }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    TruncatedSeries r = *this;
    r.require_same_order(o);
    for (int j = 0; j <= order(); ++j) r.coeff_[static_cast<std::size_t>(j)] += o[j];
    return r;
  }

  TruncatedSeries operator-(const TruncatedSeries& o) const {
    TruncatedSeries r = *this;
    r.require_same_order(o);
    for (int j = 0; j <= order(); ++j) r.coeff_[static_cast<std::size_t>(j)] -= o[j];
    return r;
  }

  TruncatedSeries operator*(const TruncatedSeries& o) const {
    require_same_order(o);
    TruncatedSeries r(order());
    for (int i = 0; i <= order(); ++i) {
      if (coeff_[static_cast<std::size_t>(i)] == Coeff(0)) continue;
      for (int j = 0; i + j <= order(); ++j)
        r.coeff_[static_cast<std::size_t>(i + j)] +=
            coeff_[static_cast<std::size_t>(i)] * o[j];
    }
    return r;
  }

  TruncatedSeries scaled(const Coeff& factor) const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeff_) c *= factor;
    return r;
  }

  // multiply by u^k, dropping what truncation pushes out
  TruncatedSeries shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    TruncatedSeries r(order());
    for (int j = 0; j + k <= order(); ++j) r.coeff_[static_cast<std::size_t>(j + k)] = coeff_[static_cast<std::size_t>(j)];
    return r;
  }

  TruncatedSeries truncated(int new_order) const {
    check_order(new_order);
    TruncatedSeries r(new_order);
    for (int j = 0; j <= new_order && j <= order(); ++j) r[j] = coeff_[static_cast<std::size_t>(j)];
    return r;
  }

  const std::vector<Coeff>& coefficients() const { return coeff_; }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    return order;
  }
  std::size_t index(int degree) const {
    if (degree < 0 || degree > order()) throw std::out_of_range("series degree out of range");
    return static_cast<std::size_t>(degree);
  }
  void require_same_order(const TruncatedSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("series order mismatch");
  }

  std::vector<Coeff> coeff_;
};

using SeriesQ = TruncatedSeries<Rational>;
using SeriesC = TruncatedSeries<std::complex<double>>;

// exp of a series with zero constant term, via f' = s'f
template <class Coeff>
TruncatedSeries<Coeff> series_exp(const TruncatedSeries<Coeff>& s) {
  if (!(s[0] == Coeff(0))) throw std::invalid_argument("series_exp needs zero constant term");
  const int J = s.order();
  TruncatedSeries<Coeff> f(J);
  f[0] = Coeff(1);
  for (int n = 1; n <= J; ++n) {
    Coeff acc(0);
    for (int k = 1; k <= n; ++k) acc += Coeff(k) * s[k] * f[n - k];
    f[n] = acc / Coeff(n);
  }
  return f;
}

// log of a series with constant term one
template <class Coeff>
TruncatedSeries<Coeff> series_log(const TruncatedSeries<Coeff>& s) {
  if (!(s[0] == Coeff(1))) throw std::invalid_argument("series_log needs constant term 1");
  const int J = s.order();
  TruncatedSeries<Coeff> g(J);
  for (int n = 1; n <= J; ++n) {
    Coeff acc(0);
    for (int k = 1; k < n; ++k) acc += Coeff(k) * g[k] * s[n - k];
    g[n] = s[n] - acc / Coeff(n);
  }
  return g;
}

template <class Coeff>
TruncatedSeries<Coeff> series_inverse(const TruncatedSeries<Coeff>& s) {
  if (s[0] == Coeff(0)) throw std::invalid_argument("series_inverse needs invertible constant term");
  const int J = s.order();
  TruncatedSeries<Coeff> r(J);
  r[0] = Coeff(1) / s[0];
  for (int n = 1; n <= J; ++n) {
    Coeff acc(0);
    for (int k = 1; k <= n; ++k) acc += s[k] * r[n - k];
    r[n] = -acc / s[0];
  }
  return r;
}

template <class Coeff>
TruncatedSeries<Coeff> series_pow(const TruncatedSeries<Coeff>& s, long exponent) {
  if (exponent < 0) return series_pow(series_inverse(s), -exponent);
  TruncatedSeries<Coeff> acc = TruncatedSeries<Coeff>::constant(s.order(), Coeff(1));
  TruncatedSeries<Coeff> base = s;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    base = base * base;
    e >>= 1UL;
  }
  return acc;
}

// rational exponent; requires constant term 1 unless the exponent is integral
inline SeriesQ series_pow(const SeriesQ& s, const Rational& exponent) {
  if (is_integer(exponent)) {
    if (!exponent.get_num().fits_slong_p())
      throw std::invalid_argument("integer exponent too large");
    return series_pow(s, exponent.get_num().get_si());
  }
  if (!(s[0] == Rational(1)))
    throw std::invalid_argument("fractional power needs constant term 1");
  return series_exp(series_log(s).scaled(exponent));
}

inline SeriesC to_complex(const SeriesQ& s) {
  SeriesC r(s.order());
  for (int j = 0; j <= s.order(); ++j) r[j] = std::complex<double>(s[j].get_d(), 0.0);
  return r;
}

// plain Horner evaluation
inline std::complex<double> series_eval(const SeriesC& s, std::complex<double> u) {
  std::complex<double> acc = 0.0;
  for (int j = s.order(); j >= 0; --j) acc = acc * u + s[j];
  return acc;
}

// exact Horner evaluation over Q(i)
inline GaussianRational series_eval_exact(const SeriesQ& s, const GaussianRational& u) {
  GaussianRational acc;
  for (int j = s.order(); j >= 0; --j)
    acc = acc * u + GaussianRational(s[j], Rational(0));
  return acc;
}

// Tail control for zeta series: with coefficients of exp(sum a_j u^j / j)
// where 0 <= a_j <= tau_identity * D (D-1)^(j-1), the series is majorized
// coefficientwise by (1 - (D-1)t)^(-beta), beta = tau_identity * D/(D-1).
struct ZetaTailParams {
  int degree_bound = 0;       // D
  double tau_identity = 1.0;  // tau(1)
};

struct SeriesEval {
  std::complex<double> value;
  double tail_bound;
};

inline SeriesEval series_eval_zeta(const SeriesC& s, std::complex<double> u,
                                   const ZetaTailParams& params) {
  SeriesEval result{series_eval(s, u), 0.0};
  const int D = params.degree_bound;
  if (D <= 1) return result;  // no closed paths beyond trivial lengths
  const double t = std::abs(u) * (D - 1);
  if (t >= 1.0) {
    result.tail_bound = std::numeric_limits<double>::infinity();
    return result;
  }
  const double beta = params.tau_identity * static_cast<double>(D) / (D - 1);
  const double majorant = std::pow(1.0 - t, -beta);
  double partial = 0.0;
  double term = 1.0;
  for (int k = 0; k <= s.order(); ++k) {
    partial += term;
    term *= (beta + k) / (k + 1) * t;
  }
  const double raw = majorant - partial;
  result.tail_bound = std::max(0.0, raw) * (1.0 + 1e-9) + 1e-300;
  return result;
}

}  // namespace ihara
