#pragma once

#include "sphereflow/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace sphereflow {

/// Which ordered variable set a polynomial lives over: {x,y,z} or {u,v}.
enum class VarSpace : std::uint8_t
{
  Sphere,
  Plane
};

constexpr int arity(VarSpace space) { return space == VarSpace::Sphere ? 3 : 2; }

/// Exponent vector; plane-space polynomials keep the third slot at zero.
using Exponents = std::array<int, 3>;

constexpr int total_degree(Exponents const &e) { return e[0] + e[1] + e[2]; }

/// Graded lexicographic order with x > y > z (u > v), largest first.
struct GradedLexGreater
{
  bool operator()(Exponents const &lhs, Exponents const &rhs) const
  {
    int const dl = total_degree(lhs), dr = total_degree(rhs);
    if (dl != dr) {
      return dl > dr;
    }
    return lhs > rhs;
  }
};

class Polynomial
{
public:
  using Terms = std::map<Exponents, Rational, GradedLexGreater>;

  Polynomial()
    : space_(VarSpace::Sphere)
  {}
  explicit Polynomial(VarSpace space)
    : space_(space)
  {}
  Polynomial(VarSpace space, Terms terms);

  static Polynomial constant(Rational const &value, VarSpace space = VarSpace::Sphere);
  static Polynomial variable(int index, VarSpace space = VarSpace::Sphere);
  static Polynomial monomial(Exponents const &exponents, Rational const &coeff, VarSpace space = VarSpace::Sphere);

  VarSpace space() const { return space_; }
  Terms const &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return degree() <= 0; }

  /// -1 for the zero polynomial.
  int degree() const;
  /// Smallest total degree present; -1 for zero.
  int low_degree() const;
  bool is_homogeneous() const;

  Rational coefficient(Exponents const &exponents) const;
  Rational constant_term() const { return coefficient({0, 0, 0}); }
  /// Leading term under graded-lex. Precondition: nonzero.
  std::pair<Exponents, Rational> leading_term() const;

  /// Same terms relabelled into another variable space (arity must allow it).
  Polynomial in_space(VarSpace space) const;

  Polynomial operator-() const;
  Polynomial &operator+=(Polynomial const &rhs);
  Polynomial &operator-=(Polynomial const &rhs);
  Polynomial &operator*=(Polynomial const &rhs);
  Polynomial &operator*=(Rational const &rhs);

  friend Polynomial operator+(Polynomial lhs, Polynomial const &rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, Polynomial const &rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial const &lhs, Polynomial const &rhs);
  friend Polynomial operator*(Polynomial lhs, Rational const &rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Rational const &lhs, Polynomial rhs) { return rhs *= lhs; }
  friend Polynomial operator+(Polynomial lhs, Rational const &rhs);
  friend Polynomial operator+(Rational const &lhs, Polynomial rhs) { return std::move(rhs) + lhs; }
  friend Polynomial operator-(Polynomial lhs, Rational const &rhs) { return std::move(lhs) + Rational(-rhs); }
  friend Polynomial operator-(Rational const &lhs, Polynomial const &rhs) { return (-rhs) + lhs; }

  friend bool operator==(Polynomial const &lhs, Polynomial const &rhs);
  friend bool operator!=(Polynomial const &lhs, Polynomial const &rhs) { return !(lhs == rhs); }

private:
  void add_term(Exponents const &e, Rational const &c);

  VarSpace space_;
  Terms terms_;
};

/// Space shared by two operands; constants adapt to the other side.
VarSpace common_space(Polynomial const &lhs, Polynomial const &rhs);

struct SphereVars
{
  Polynomial x, y, z;
};
struct PlaneVars
{
  Polynomial u, v;
};
SphereVars sphere_vars();
PlaneVars plane_vars();

/// x^2 + y^2 + z^2 - 1
Polynomial sphere_polynomial();

Polynomial pow(Polynomial const &base, int exponent);

/// q with p == d*q exactly, or nullopt. Throws std::domain_error when d is zero.
std::optional<Polynomial> exact_divide(Polynomial const &p, Polynomial const &d);

/// Composition p(bindings[0], bindings[1], ...). bindings.size() must equal arity(p.space()).
Polynomial substitute(Polynomial const &p, std::span<Polynomial const> bindings);

Polynomial homogeneous_component(Polynomial const &p, int degree);

Polynomial differentiate(Polynomial const &p, int variable);

/// Homogenizes p to the given degree with an extra variable w and substitutes
/// bindings for (vars..., w). Used by the stereographic pushforward.
Polynomial substitute_homogenized(Polynomial const &p, int degree, std::span<Polynomial const> bindings,
                                  Polynomial const &w_binding);

template <typename Scalar>
Scalar evaluate(Polynomial const &p, std::span<Scalar const> point)
{
  if (static_cast<int>(point.size()) != arity(p.space())) {
    throw std::invalid_argument("evaluate: point arity does not match variable space");
  }
  int const n = arity(p.space());
  int const deg = std::max(p.degree(), 0);
  std::vector<std::vector<Scalar>> powers(n, std::vector<Scalar>(deg + 1, Scalar(1)));
  for (int i = 0; i < n; ++i) {
    for (int k = 1; k <= deg; ++k) {
      powers[i][k] = powers[i][k - 1] * point[i];
    }
  }
  Scalar total(0);
  for (auto const &[e, c] : p.terms()) {
    Scalar term = rational_cast<Scalar>(c);
    for (int i = 0; i < n; ++i) {
      term *= powers[i][e[i]];
    }
    total += term;
  }
  return total;
}

inline double evaluate(Polynomial const &p, std::initializer_list<double> point)
{
  return evaluate<double>(p, std::span<double const>(point.begin(), point.size()));
}

/// Coefficients converted once to Scalar, for evaluation in inner loops (integrators).
template <typename Scalar>
class CompiledPolynomial
{
public:
  CompiledPolynomial() = default;
  explicit CompiledPolynomial(Polynomial const &p)
    : arity_(sphereflow::arity(p.space()))
    , degree_(std::max(p.degree(), 0))
  {
    if (degree_ > 15) {
      throw std::invalid_argument("CompiledPolynomial: degree above 15");
    }
    terms_.reserve(p.size());
    for (auto const &[e, c] : p.terms()) {
      terms_.push_back({e, rational_cast<Scalar>(c)});
    }
  }

  int arity() const { return arity_; }

  template <typename Point>
  Scalar operator()(Point const &point) const
  {
    std::array<std::array<Scalar, 16>, 3> powers{};
    for (int i = 0; i < arity_; ++i) {
      powers[i][0] = Scalar(1);
      for (int k = 1; k <= degree_; ++k) {
        powers[i][k] = powers[i][k - 1] * point[i];
      }
    }
    Scalar total(0);
    for (auto const &[e, c] : terms_) {
      Scalar term = c;
      for (int i = 0; i < arity_; ++i) {
        term *= powers[i][e[i]];
      }
      total += term;
    }
    return total;
  }

private:
  struct Term
  {
    Exponents exponents;
    Scalar coeff;
  };
  int arity_ = 0;
  int degree_ = 0;
  std::vector<Term> terms_;
};

} // namespace sphereflow
