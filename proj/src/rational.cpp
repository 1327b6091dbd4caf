#include "sphereflow/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace sphereflow {

Rational parse_rational(std::string_view text)
{
  std::string s(text);
  if (s.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  if (auto const e = s.find_first_of("eE"); e != std::string::npos) {
    std::string const exponent = s.substr(e + 1);
    std::size_t used = 0;
    long power = 0;
    try {
      power = std::stol(exponent, &used, 10);
    } catch (std::exception const &) {
      used = 0;
    }
    if (exponent.empty() || used != exponent.size() || std::abs(power) > 1000) {
      throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(power)));
    Rational const mantissa = parse_rational(s.substr(0, e));
    return power >= 0 ? Rational(mantissa * scale) : Rational(mantissa / scale);
  }
  auto const dot = s.find('.');
  Rational out;
  try {
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      mpz_class den = 1;
      for (std::size_t i = dot + 1; i < s.size(); ++i) {
        den *= 10;
      }
      out = Rational(mpz_class(digits, 10), den);
    } else {
      out = Rational(s, 10);
    }
  } catch (std::invalid_argument const &) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  if (out.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  out.canonicalize();
  return out;
}

std::string to_string(const Rational &value) { return value.get_str(); }

int sign(const Rational &value) { return sgn(value); }

Rational best_rational(double value, long max_denominator)
{
  if (!std::isfinite(value)) {
    throw std::domain_error("best_rational: non-finite input");
  }
  // Convergents h/k of the continued fraction expansion.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(value));
  mpz_class k_prev = 0, k = 1;
  double frac = value - std::floor(value);
  for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
    double const inv = 1.0 / frac;
    long const a = static_cast<long>(std::floor(inv));
    mpz_class const k_next = a * k + k_prev;
    if (k_next > max_denominator) {
      break;
    }
    mpz_class const h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - static_cast<double>(a);
  }
  Rational out(h, k);
  out.canonicalize();
  return out;
}

} // namespace sphereflow
