#include "doctest.h"

#include <cmath>
#include <complex>

#include "ihara/rng.hpp"
#include "ihara/series.hpp"

using namespace ihara;

namespace {

SeriesQ random_series(Rng& rng, int order, bool unit_constant) {
  SeriesQ s(order);
  s[0] = unit_constant ? Rational(1) : Rational(0);
  for (int j = 1; j <= order; ++j) {
    const long num = static_cast<long>(rng.below(9)) - 4;
    const long den = 1 + static_cast<long>(rng.below(4));
    Rational c(num, den);
    c.canonicalize();
    s[j] = c;
  }
  return s;
}

}  // namespace

TEST_CASE("exp of zero and log of one") {
  CHECK(series_exp(SeriesQ(8)) == SeriesQ::constant(8, Rational(1)));
  CHECK(series_log(SeriesQ::constant(8, Rational(1))) == SeriesQ(8));
  CHECK_THROWS_AS(series_exp(SeriesQ::constant(4, Rational(1))), std::invalid_argument);
  CHECK_THROWS_AS(series_log(SeriesQ(4)), std::invalid_argument);
}

TEST_CASE("exp(2 sum u^{3k}/k) is the binomial series of (1-u^3)^-2") {
  SeriesQ s(6);
  s[3] = Rational(2);
  s[6] = Rational(1);  // 2 u^6 / 2
  const SeriesQ z = series_exp(s);
  SeriesQ expected(6);
  expected[0] = 1;
  expected[3] = 2;
  expected[6] = 3;
  CHECK(z == expected);

  // same function through the power route, one order higher
  SeriesQ base = SeriesQ::constant(7, Rational(1));
  base[3] = Rational(-1);
  const SeriesQ powed = series_pow(base, -2L);
  CHECK(powed[0] == 1);
  CHECK(powed[3] == 2);
  CHECK(powed[6] == 3);
  CHECK(powed[7] == 0);
}

TEST_CASE("log of 1 - u^2") {
  SeriesQ s = SeriesQ::constant(6, Rational(1));
  s[2] = Rational(-1);
  const SeriesQ l = series_log(s);
  CHECK(l[2] == Rational(-1));
  CHECK(l[4] == Rational(-1, 2));
  CHECK(l[6] == Rational(-1, 3));
  CHECK(l[1] == 0);
  CHECK(l[3] == 0);
}

TEST_CASE("log is a homomorphism") {
  SeriesQ a = SeriesQ::constant(8, Rational(1));
  a[1] = Rational(-1);  // 1 - u
  SeriesQ b = SeriesQ::constant(8, Rational(1));
  b[1] = Rational(-2);  // 1 - 2u
  CHECK(series_log(a * b) == series_log(a) + series_log(b));
}

TEST_CASE("exp and log invert each other exactly") {
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const SeriesQ zero_based = random_series(rng, 10, false);
    CHECK(series_log(series_exp(zero_based)) == zero_based);
    const SeriesQ one_based = random_series(rng, 10, true);
    CHECK(series_exp(series_log(one_based)) == one_based);
  }
}

TEST_CASE("ring axioms in exact mode") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const SeriesQ a = random_series(rng, 9, false);
    const SeriesQ b = random_series(rng, 9, true);
    const SeriesQ c = random_series(rng, 9, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a * SeriesQ::constant(9, Rational(1)) == a);
  }
}

TEST_CASE("integer power with integral exponent of chi") {
  // (1-u^2)^-chi with chi = -2 is exactly (1-u^2)^2
  SeriesQ base = SeriesQ::constant(6, Rational(1));
  base[2] = Rational(-1);
  const SeriesQ squared = series_pow(base, Rational(2));
  SeriesQ expected(6);
  expected[0] = 1;
  expected[2] = -2;
  expected[4] = 1;
  CHECK(squared == expected);
}

TEST_CASE("fractional power round trip") {
  SeriesQ base = SeriesQ::constant(9, Rational(1));
  base[3] = Rational(-1);
  const SeriesQ root = series_pow(base, Rational(2, 3));
  CHECK(series_pow(root, Rational(3, 2)) == base);
}

TEST_CASE("float mode tracks exact mode") {
  Rng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const SeriesQ s = random_series(rng, 10, false);
    const SeriesC approx = series_exp(to_complex(s));
    const SeriesQ exact = series_exp(s);
    for (int j = 0; j <= 10; ++j) {
      const double reference = exact[j].get_d();
      const double scale = std::max(1.0, std::abs(reference));
      CHECK(std::abs(approx[j].real() - reference) <= 1e-12 * scale);
      CHECK(std::abs(approx[j].imag()) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("evaluation at zero returns the constant term") {
  SeriesQ s(5);
  s[0] = Rational(9, 4);  // exactly representable
  s[2] = Rational(1);
  CHECK(series_eval(to_complex(s), {0.0, 0.0}) == std::complex<double>(2.25, 0.0));
  const GaussianRational exact = series_eval_exact(s, GaussianRational());
  CHECK(exact.re == Rational(9, 4));
  CHECK(exact.im == 0);
}

TEST_CASE("zeta tail bound covers the truncation error of (1-u^3)^-2") {
  // the C_3 zeta series: degree bound 2, tau(1) = 3
  const int order = 12;
  SeriesQ log_z(order);
  for (int j = 3; j <= order; j += 3) log_z[j] = Rational(6) / Rational(j);
  const SeriesC z = to_complex(series_exp(log_z));

  const std::complex<double> u(0.2, 0.0);
  const SeriesEval eval = series_eval_zeta(z, u, ZetaTailParams{2, 3.0});
  const double truth = std::pow(1.0 - 0.008, -2.0);
  CHECK(std::abs(eval.value - truth) <= eval.tail_bound + 1e-12);

  // the bound shrinks geometrically with the order
  double previous = 1e300;
  for (int j = 4; j <= order; j += 2) {
    const SeriesEval shorter = series_eval_zeta(to_complex(series_exp(log_z).truncated(j)), u,
                                                ZetaTailParams{2, 3.0});
    CHECK(shorter.tail_bound < previous);
    previous = shorter.tail_bound;
  }

  // outside the holomorphy disc the bound is infinite
  const SeriesEval outside = series_eval_zeta(z, {1.5, 0.0}, ZetaTailParams{2, 3.0});
  CHECK(std::isinf(outside.tail_bound));
}

TEST_CASE("order mismatch is rejected") {
  CHECK_THROWS_AS(SeriesQ(4) + SeriesQ(5), std::invalid_argument);
  CHECK_THROWS_AS(SeriesQ(4) * SeriesQ(5), std::invalid_argument);
}
