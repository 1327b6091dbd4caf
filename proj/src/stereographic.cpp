#include "sphereflow/stereographic.hpp"

#include "sphereflow/darboux.hpp"

#include <stdexcept>

namespace sphereflow {

namespace {

std::vector<Rational> multiply(std::vector<Rational> const &a, std::vector<Rational> const &b)
{
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<Rational> power(std::vector<Rational> const &base, int k)
{
  std::vector<Rational> out{Rational(1)};
  for (int i = 0; i < k; ++i) {
    out = multiply(out, base);
  }
  return out;
}

} // namespace

Polynomial unit_circle_polynomial()
{
  auto const [u, v] = plane_vars();
  return u * u + v * v - Rational(1);
}

PlanarField pushforward(SphereField const &field)
{
  if (!field.is_tangent()) {
    throw std::invalid_argument("pushforward: field is not tangent to the sphere");
  }
  if (field.degree() > 3) {
    throw std::invalid_argument("pushforward: degree above 3");
  }
  auto const [u, v] = plane_vars();
  Polynomial const rho = u * u + v * v;
  std::array<Polynomial, 3> const bindings{Rational(2) * u, Rational(2) * v, Rational(1) - rho};
  Polynomial const w = Rational(1) + rho;
  PlanarField out;
  out.Ptilde = substitute_homogenized(field.P(), 3, bindings, w).in_space(VarSpace::Plane);
  out.Qtilde = substitute_homogenized(field.Q(), 3, bindings, w).in_space(VarSpace::Plane);
  out.Rtilde = substitute_homogenized(field.R(), 3, bindings, w).in_space(VarSpace::Plane);
  out.Pcal = out.Ptilde - u * out.Rtilde;
  out.Qcal = out.Qtilde - v * out.Rtilde;
  return out;
}

Polynomial radial_derivative(PlanarField const &planar)
{
  auto const [u, v] = plane_vars();
  Polynomial const radial = u * planar.Pcal + v * planar.Qcal;
  Polynomial const expected = Rational(-1, 2) * (u * u + v * v + Rational(1)) * planar.Rtilde;
  if (radial != expected) {
    throw std::logic_error("radial_derivative: pushforward identity failed");
  }
  return radial;
}

PeriodicityVerdict great_circle_is_periodic(CubicDecomposition const &d)
{
  if (!great_circle_form_check(d)) {
    throw std::invalid_argument("great_circle_is_periodic: z = 0 is not an invariant great circle");
  }
  PeriodicityVerdict out;
  Polynomial::Terms terms;
  for (auto const &[e, c] : d.A.terms()) {
    if (e[2] == 0) {
      terms.emplace(e, c);
    }
  }
  out.g = Polynomial(VarSpace::Plane, std::move(terms));
  if (out.g.is_zero()) {
    out.degenerate = true;
    return out;
  }
  // u (1 + t^2) = 1 - t^2, v (1 + t^2) = 2t.
  std::vector<Rational> const u_num{Rational(1), Rational(0), Rational(-1)};
  std::vector<Rational> const v_num{Rational(0), Rational(2)};
  std::vector<Rational> const w{Rational(1), Rational(0), Rational(1)};
  std::vector<Rational> total(5, Rational(0));
  for (auto const &[e, c] : out.g.terms()) {
    auto const term = multiply(multiply(power(u_num, e[0]), power(v_num, e[1])), power(w, 2 - e[0] - e[1]));
    for (std::size_t k = 0; k < term.size(); ++k) {
      total[k] += c * term[k];
    }
  }
  out.boundary = UnivariatePolynomial(std::move(total));
  std::array<Rational, 2> const excluded{Rational(-1), Rational(0)};
  out.excluded_value = evaluate<Rational>(out.g, excluded);
  if (!out.boundary.is_zero()) {
    out.sturm = count_real_roots(out.boundary);
  }
  out.periodic = out.excluded_value != 0 && !out.boundary.is_zero() && out.sturm.roots == 0;
  return out;
}

} // namespace sphereflow
