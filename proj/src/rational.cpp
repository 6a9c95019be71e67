#include "ihara/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ihara {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    // decimal: digits '.' digits, optional sign
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0) throw std::invalid_argument("malformed decimal: " + text);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      const char c = digits[i];
      if (i == 0 && (c == '+' || c == '-')) continue;
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("malformed decimal: " + text);
    }
    mpz_class num(digits, 10);
    mpz_class den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& value) { return value.get_str(); }

Rational rational_abs(const Rational& value) { return Rational(abs(value)); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

GaussianRational GaussianRational::pow(long exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative Gaussian exponent");
  GaussianRational acc(Rational(1), Rational(0));
  GaussianRational b = *this;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) acc = acc * b;
    b = b * b;
    e >>= 1UL;
  }
  return acc;
}

}  // namespace ihara
