#include "sphereflow/polynomial.hpp"

#include <algorithm>

namespace sphereflow {

namespace {

void check_arity(VarSpace space, Exponents const &e)
{
  if (e[0] < 0 || e[1] < 0 || e[2] < 0) {
    throw std::invalid_argument("negative exponent");
  }
  if (space == VarSpace::Plane && e[2] != 0) {
    throw std::invalid_argument("plane-space monomial uses a third variable");
  }
}

Exponents add_exponents(Exponents const &a, Exponents const &b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

bool divides(Exponents const &d, Exponents const &e) { return d[0] <= e[0] && d[1] <= e[1] && d[2] <= e[2]; }

} // namespace

Polynomial::Polynomial(VarSpace space, Terms terms)
  : space_(space)
{
  for (auto &[e, c] : terms) {
    check_arity(space, e);
    if (c != 0) {
      terms_.emplace(e, std::move(c));
    }
  }
}

Polynomial Polynomial::constant(Rational const &value, VarSpace space)
{
  return monomial({0, 0, 0}, value, space);
}

Polynomial Polynomial::variable(int index, VarSpace space)
{
  if (index < 0 || index >= arity(space)) {
    throw std::invalid_argument("variable index out of range");
  }
  Exponents e{0, 0, 0};
  e[index] = 1;
  return monomial(e, 1, space);
}

Polynomial Polynomial::monomial(Exponents const &exponents, Rational const &coeff, VarSpace space)
{
  Polynomial p(space);
  check_arity(space, exponents);
  p.add_term(exponents, coeff);
  return p;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

int Polynomial::low_degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

bool Polynomial::is_homogeneous() const { return degree() == low_degree(); }

Rational Polynomial::coefficient(Exponents const &exponents) const
{
  auto const it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Exponents, Rational> Polynomial::leading_term() const
{
  if (terms_.empty()) {
    throw std::domain_error("leading term of the zero polynomial");
  }
  return *terms_.begin();
}

Polynomial Polynomial::in_space(VarSpace space) const
{
  Polynomial out(space);
  for (auto const &[e, c] : terms_) {
    check_arity(space, e);
    out.terms_.emplace(e, c);
  }
  return out;
}

void Polynomial::add_term(Exponents const &e, Rational const &c)
{
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

VarSpace common_space(Polynomial const &lhs, Polynomial const &rhs)
{
  if (lhs.space() == rhs.space()) {
    return lhs.space();
  }
  if (lhs.is_constant()) {
    return rhs.space();
  }
  if (rhs.is_constant()) {
    return lhs.space();
  }
  throw std::invalid_argument("variable-space mismatch between polynomial operands");
}

Polynomial Polynomial::operator-() const
{
  Polynomial out(*this);
  for (auto &[e, c] : out.terms_) {
    c = -c;
  }
  return out;
}

Polynomial &Polynomial::operator+=(Polynomial const &rhs)
{
  space_ = common_space(*this, rhs);
  for (auto const &[e, c] : rhs.terms_) {
    add_term(e, c);
  }
  return *this;
}

Polynomial &Polynomial::operator-=(Polynomial const &rhs)
{
  space_ = common_space(*this, rhs);
  for (auto const &[e, c] : rhs.terms_) {
    add_term(e, -c);
  }
  return *this;
}

Polynomial operator*(Polynomial const &lhs, Polynomial const &rhs)
{
  Polynomial out(common_space(lhs, rhs));
  for (auto const &[ea, ca] : lhs.terms_) {
    for (auto const &[eb, cb] : rhs.terms_) {
      out.add_term(add_exponents(ea, eb), ca * cb);
    }
  }
  return out;
}

Polynomial &Polynomial::operator*=(Polynomial const &rhs)
{
  *this = *this * rhs;
  return *this;
}

Polynomial &Polynomial::operator*=(Rational const &rhs)
{
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, c] : terms_) {
    c *= rhs;
  }
  return *this;
}

Polynomial operator+(Polynomial lhs, Rational const &rhs)
{
  lhs.add_term({0, 0, 0}, rhs);
  return lhs;
}

bool operator==(Polynomial const &lhs, Polynomial const &rhs)
{
  if (lhs.terms_ != rhs.terms_) {
    return false;
  }
  return lhs.space_ == rhs.space_ || lhs.is_constant();
}

SphereVars sphere_vars()
{
  return {Polynomial::variable(0), Polynomial::variable(1), Polynomial::variable(2)};
}

PlaneVars plane_vars()
{
  return {Polynomial::variable(0, VarSpace::Plane), Polynomial::variable(1, VarSpace::Plane)};
}

Polynomial sphere_polynomial()
{
  auto const [x, y, z] = sphere_vars();
  return x * x + y * y + z * z - Rational(1);
}

Polynomial pow(Polynomial const &base, int exponent)
{
  if (exponent < 0) {
    throw std::invalid_argument("negative polynomial power");
  }
  Polynomial result = Polynomial::constant(1, base.space());
  Polynomial square = base;
  while (exponent > 0) {
    if (exponent & 1) {
      result *= square;
    }
    exponent >>= 1;
    if (exponent > 0) {
      square *= square;
    }
  }
  return result;
}

std::optional<Polynomial> exact_divide(Polynomial const &p, Polynomial const &d)
{
  if (d.is_zero()) {
    throw std::domain_error("exact_divide: division by the zero polynomial");
  }
  VarSpace const space = common_space(p, d);
  auto const [lead_e, lead_c] = d.leading_term();
  Polynomial remainder = p.in_space(space);
  Polynomial quotient(space);
  // Single-divisor reduction: the remainder is zero iff d divides p.
  while (!remainder.is_zero()) {
    auto const [e, c] = remainder.leading_term();
    if (!divides(lead_e, e)) {
      return std::nullopt;
    }
    Exponents const qe{e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2]};
    Polynomial const step = Polynomial::monomial(qe, c / lead_c, space);
    quotient += step;
    remainder -= step * d;
  }
  return quotient;
}

Polynomial substitute(Polynomial const &p, std::span<Polynomial const> bindings)
{
  int const n = arity(p.space());
  if (static_cast<int>(bindings.size()) != n) {
    throw std::invalid_argument("substitute: binding count does not match variable space arity");
  }
  VarSpace target = bindings.empty() ? p.space() : bindings[0].space();
  bool fixed = false;
  for (auto const &b : bindings) {
    if (b.is_constant()) {
      continue;
    }
    if (fixed && b.space() != target) {
      throw std::invalid_argument("substitute: bindings live in different variable spaces");
    }
    target = b.space();
    fixed = true;
  }
  int const deg = std::max(p.degree(), 0);
  std::vector<std::vector<Polynomial>> powers(n);
  for (int i = 0; i < n; ++i) {
    powers[i].push_back(Polynomial::constant(1, target));
    for (int k = 1; k <= deg; ++k) {
      powers[i].push_back(powers[i].back() * bindings[i]);
    }
  }
  Polynomial out(target);
  for (auto const &[e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(c, target);
    for (int i = 0; i < n; ++i) {
      if (e[i] > 0) {
        term *= powers[i][e[i]];
      }
    }
    out += term;
  }
  return out.in_space(target);
}

Polynomial homogeneous_component(Polynomial const &p, int degree)
{
  Polynomial::Terms terms;
  for (auto const &[e, c] : p.terms()) {
    if (total_degree(e) == degree) {
      terms.emplace(e, c);
    }
  }
  return Polynomial(p.space(), std::move(terms));
}

Polynomial differentiate(Polynomial const &p, int variable)
{
  if (variable < 0 || variable >= arity(p.space())) {
    throw std::invalid_argument("differentiate: variable not in polynomial's space");
  }
  Polynomial::Terms terms;
  for (auto const &[e, c] : p.terms()) {
    if (e[variable] == 0) {
      continue;
    }
    Exponents de = e;
    de[variable] -= 1;
    terms.emplace(de, c * e[variable]);
  }
  return Polynomial(p.space(), std::move(terms));
}

Polynomial substitute_homogenized(Polynomial const &p, int degree, std::span<Polynomial const> bindings,
                                  Polynomial const &w_binding)
{
  if (p.degree() > degree) {
    throw std::invalid_argument("substitute_homogenized: polynomial degree exceeds homogenization degree");
  }
  std::vector<Polynomial> w_powers{Polynomial::constant(1, w_binding.space())};
  for (int k = 1; k <= degree; ++k) {
    w_powers.push_back(w_powers.back() * w_binding);
  }
  Polynomial out(w_binding.space());
  for (int j = 0; j <= std::max(p.degree(), 0); ++j) {
    Polynomial const part = homogeneous_component(p, j);
    if (part.is_zero()) {
      continue;
    }
    out += substitute(part, bindings) * w_powers[degree - j];
  }
  return out;
}

} // namespace sphereflow
