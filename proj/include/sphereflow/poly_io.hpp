#pragma once

#include "sphereflow/polynomial.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sphereflow {

class ParseError : public std::invalid_argument
{
public:
  ParseError(std::string const &message, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Accepts + - * / ^ and parentheses over integer/decimal/rational literals and the
/// variables x y z (sphere) or u v (plane). Division is allowed by nonzero constants
/// only. Inputs without variables take `fallback`.
Polynomial parse_polynomial(std::string_view text, VarSpace fallback = VarSpace::Sphere);

/// Descending graded-lex terms, e.g. "3/2*x^2*y - z"; the zero polynomial prints as "0".
std::string to_string(Polynomial const &p);

std::ostream &operator<<(std::ostream &os, Polynomial const &p);

} // namespace sphereflow
