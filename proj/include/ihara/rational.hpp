#pragma once

#include <complex>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace ihara {

// Exact arbitrary-precision rational scalar used by all exact-mode arithmetic.
// GMP keeps values canonical (reduced, positive denominator).
using Rational = mpq_class;

// Parses "p/q", "p", or a plain decimal like "-1.25". Throws std::invalid_argument.
Rational rational_from_string(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

Rational rational_abs(const Rational& value);
bool is_integer(const Rational& value);

// Exact complex arithmetic over Q(i); used to evaluate truncated series at
// rational sample points without any rounding.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  GaussianRational operator+(const GaussianRational& o) const { return {Rational(re + o.re), Rational(im + o.im)}; }
  GaussianRational operator-(const GaussianRational& o) const { return {Rational(re - o.re), Rational(im - o.im)}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {Rational(re * o.re - im * o.im), Rational(re * o.im + im * o.re)};
  }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

  // squared modulus, exact
  Rational norm2() const { return Rational(re * re + im * im); }
  bool is_real() const { return im == 0; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  GaussianRational pow(long exponent) const;
};

}  // namespace ihara
