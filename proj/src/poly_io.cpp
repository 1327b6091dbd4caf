#include "sphereflow/poly_io.hpp"

#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>

namespace sphereflow {

ParseError::ParseError(std::string const &message, std::size_t position)
  : std::invalid_argument(message + " at position " + std::to_string(position))
  , position_(position)
{}

namespace {

constexpr char sphere_names[] = {'x', 'y', 'z'};
constexpr char plane_names[] = {'u', 'v'};

class Parser
{
public:
  Parser(std::string_view text, VarSpace fallback)
    : text_(text)
    , fallback_(fallback)
  {}

  Polynomial run()
  {
    // Variable space is fixed up front so constants combine cleanly.
    for (char c : text_) {
      bool const sphere = c == 'x' || c == 'y' || c == 'z';
      bool const plane = c == 'u' || c == 'v';
      if (sphere || plane) {
        VarSpace const s = sphere ? VarSpace::Sphere : VarSpace::Plane;
        if (space_ && *space_ != s) {
          throw ParseError("mixes sphere (x,y,z) and plane (u,v) variables", 0);
        }
        space_ = s;
      }
    }
    if (!space_) {
      space_ = fallback_;
    }
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("empty expression", pos_);
    }
    Polynomial out = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return out.in_space(*space_);
  }

private:
  void skip_ws()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c)
  {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr()
  {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term()
  {
    Polynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t const at = pos_;
        Polynomial const divisor = unary();
        if (!divisor.is_constant() || divisor.is_zero()) {
          throw ParseError("division only by nonzero constants", at);
        }
        acc *= Rational(1 / divisor.constant_term());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary()
  {
    if (accept('-')) {
      return -unary();
    }
    if (accept('+')) {
      return unary();
    }
    return power();
  }

  Polynomial power()
  {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t const start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (start == pos_) {
        throw ParseError("expected non-negative integer exponent", start);
      }
      int const exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
      return pow(base, exponent);
    }
    return base;
  }

  Polynomial atom()
  {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of expression", pos_);
    }
    char const c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) {
        throw ParseError("expected ')'", pos_);
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t const start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      // Exponent suffix: e or E, optional sign, digits.
      if (pos_ + 1 < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        std::size_t digits = pos_ + 1;
        if (text_[digits] == '+' || text_[digits] == '-') {
          ++digits;
        }
        if (digits < text_.size() && std::isdigit(static_cast<unsigned char>(text_[digits]))) {
          pos_ = digits;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
          }
        }
      }
      try {
        return Polynomial::constant(parse_rational(text_.substr(start, pos_ - start)), *space_);
      } catch (std::invalid_argument const &) {
        throw ParseError("malformed number", start);
      }
    }
    char const *names = *space_ == VarSpace::Sphere ? sphere_names : plane_names;
    for (int i = 0; i < arity(*space_); ++i) {
      if (c == names[i]) {
        ++pos_;
        return Polynomial::variable(i, *space_);
      }
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  VarSpace fallback_;
  std::optional<VarSpace> space_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, VarSpace fallback) { return Parser(text, fallback).run(); }

std::string to_string(Polynomial const &p)
{
  if (p.is_zero()) {
    return "0";
  }
  char const *names = p.space() == VarSpace::Sphere ? sphere_names : plane_names;
  std::ostringstream out;
  bool first = true;
  for (auto const &[e, c] : p.terms()) {
    Rational const magnitude = abs(c);
    if (first) {
      if (c < 0) {
        out << '-';
      }
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool const is_const = total_degree(e) == 0;
    bool need_star = false;
    if (is_const || magnitude != 1) {
      out << to_string(Rational(magnitude));
      need_star = true;
    }
    for (int i = 0; i < arity(p.space()); ++i) {
      if (e[i] == 0) {
        continue;
      }
      if (need_star) {
        out << '*';
      }
      out << names[i];
      if (e[i] > 1) {
        out << '^' << e[i];
      }
      need_star = true;
    }
  }
  return out.str();
}

std::ostream &operator<<(std::ostream &os, Polynomial const &p) { return os << to_string(p); }

} // namespace sphereflow
