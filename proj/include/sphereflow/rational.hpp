#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <type_traits>

namespace sphereflow {

/// Arbitrary-precision rational; every symbolic computation in the library is exact over Q.
using Rational = mpq_class;

/// Parses "7", "-3/4" or "0.125" (decimals are converted exactly).
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" with q > 0, or "p" when q == 1.
std::string to_string(const Rational &value);

int sign(const Rational &value);

/// Closest rational with denominator <= max_denominator (continued fractions).
Rational best_rational(double value, long max_denominator);

/// Conversion used at the exact/numeric boundary.
template <typename Scalar>
Scalar rational_cast(const Rational &value)
{
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return value;
  } else if constexpr (std::is_same_v<Scalar, double>) {
    return value.get_d();
  } else {
    return Scalar(value.get_num().get_str()) / Scalar(value.get_den().get_str());
  }
}

} // namespace sphereflow
