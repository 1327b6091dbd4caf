#include "sphereflow/darboux.hpp"

#include "sphereflow/linear_exact.hpp"
#include "sphereflow/poly_matrix.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace sphereflow {

Polynomial lie_derivative(SphereField const &field, Polynomial const &f)
{
  Polynomial const g = f.in_space(VarSpace::Sphere);
  return field.P() * differentiate(g, 0) + field.Q() * differentiate(g, 1) + field.R() * differentiate(g, 2);
}

std::optional<InvariantSetReport> cofactor_of(SphereField const &field, Polynomial const &f)
{
  if (f.is_zero()) {
    throw std::invalid_argument("cofactor_of: zero polynomial");
  }
  auto cofactor = exact_divide(lie_derivative(field, f), f);
  if (!cofactor) {
    return std::nullopt;
  }
  return InvariantSetReport{f, std::move(*cofactor), std::nullopt};
}

bool is_first_integral(SphereField const &field, Polynomial const &H) { return lie_derivative(field, H).is_zero(); }

Polynomial extactic(SphereField const &field, std::vector<Polynomial> const &basis, std::uint64_t seed)
{
  int const l = static_cast<int>(basis.size());
  if (l < 2) {
    throw std::invalid_argument("extactic: basis needs at least two polynomials");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numerator(-97, 97);
  std::uniform_int_distribution<long> denominator(1, 13);
  bool independent = false;
  for (int attempt = 0; attempt < 5 && !independent; ++attempt) {
    std::vector<RationalRow> values(l, RationalRow(l));
    for (int i = 0; i < l; ++i) {
      std::array<Rational, 3> point;
      for (auto &coord : point) {
        coord = Rational(numerator(rng), denominator(rng));
        coord.canonicalize();
      }
      for (int j = 0; j < l; ++j) {
        values[i][j] = evaluate<Rational>(basis[j].in_space(VarSpace::Sphere), point);
      }
    }
    independent = rank_exact(std::move(values)) == l;
  }
  if (!independent) {
    throw DependentBasisError("extactic: basis is linearly dependent");
  }
  PolyMatrix m(l, l);
  for (int i = 0; i < l; ++i) {
    Polynomial current = basis[i].in_space(VarSpace::Sphere);
    for (int j = 0; j < l; ++j) {
      m(j, i) = current;
      if (j + 1 < l) {
        current = lie_derivative(field, current);
      }
    }
  }
  return determinant(std::move(m));
}

Multiplicity invariant_multiplicity(SphereField const &field, Polynomial const &f, std::vector<Polynomial> const &basis)
{
  if (f.is_zero()) {
    throw std::invalid_argument("invariant_multiplicity: zero polynomial");
  }
  std::set<Exponents, GradedLexGreater> monomials;
  for (auto const *p : {&f}) {
    for (auto const &[e, c] : p->terms()) {
      monomials.insert(e);
    }
  }
  for (auto const &v : basis) {
    for (auto const &[e, c] : v.terms()) {
      monomials.insert(e);
    }
  }
  std::vector<RationalRow> matrix;
  std::vector<Rational> rhs;
  for (auto const &e : monomials) {
    RationalRow row;
    for (auto const &v : basis) {
      row.push_back(v.coefficient(e));
    }
    matrix.push_back(std::move(row));
    rhs.push_back(f.coefficient(e));
  }
  if (!solve_exact(std::move(matrix), std::move(rhs))) {
    throw std::invalid_argument("invariant_multiplicity: polynomial is not in the span of the basis");
  }
  Polynomial remaining = extactic(field, basis);
  if (remaining.is_zero()) {
    return Multiplicity::unbounded();
  }
  int k = 0;
  Polynomial const g = f.in_space(VarSpace::Sphere);
  while (auto q = exact_divide(remaining, g)) {
    remaining = std::move(*q);
    ++k;
    if (g.is_constant()) {
      break;
    }
  }
  return Multiplicity::finite(k);
}

SphereField build_integrable_family(Rational const &a, Rational const &b, Rational const &c, Rational const &gamma,
                                    Polynomial const &C)
{
  if (a == 0) {
    throw std::invalid_argument("build_integrable_family: a must be nonzero");
  }
  auto const [x, y, z] = sphere_vars();
  Rational const alpha = c * gamma / a;
  Rational const beta = -b * gamma / a;
  CubicDecomposition d{alpha * y + beta * z, -alpha * x + gamma * z, -beta * x - gamma * y,
                       Rational(c / a) * C, Rational(-b / a) * C, C};
  SphereField field = build_cubic(d);
  if (!is_first_integral(field, sphere_polynomial()) || !is_first_integral(field, a * x + b * y + c * z)) {
    throw std::logic_error("build_integrable_family: first integrals failed to verify");
  }
  return field;
}

bool great_circle_form_check(CubicDecomposition const &d)
{
  auto b = [&](int i, int j) { return d.B.coefficient({i, j, 0}); };
  auto c = [&](int i, int j) { return d.C.coefficient({i, j, 0}); };
  return b(1, 0) == 0 && b(2, 0) == 0 && c(0, 1) == 0 && c(0, 2) == 0 && c(1, 0) == -b(0, 1) &&
         c(1, 1) == -b(0, 2) && c(2, 0) == -b(1, 1);
}

Rational CircleSpec::offset_squared() const
{
  Rational const n = a * a + b * b + c * c;
  if (n == 0) {
    throw std::invalid_argument("circle normal (a, b, c) is zero");
  }
  return d * d / n;
}

void CircleSpec::validate() const
{
  if (offset_squared() >= 1) {
    throw std::invalid_argument("plane does not meet the unit sphere in a circle");
  }
}

Polynomial CircleSpec::plane() const
{
  auto const [x, y, z] = sphere_vars();
  return a * x + b * y + c * z + d;
}

Polynomial cone_polynomial(CircleSpec const &circle)
{
  if (circle.d == 0) {
    throw std::invalid_argument("cone_polynomial: great circles use the plane itself");
  }
  circle.validate();
  auto const [x, y, z] = sphere_vars();
  auto const &[a, b, c, d] = circle;
  Rational const d2 = d * d;
  return Rational(a * a - d2) * x * x + Rational(b * b - d2) * y * y + Rational(c * c - d2) * z * z +
         Rational(2 * a * b) * x * y + Rational(2 * a * c) * x * z + Rational(2 * b * c) * y * z;
}

std::optional<InvariantSetReport> check_invariant_circle(SphereField const &field, CircleSpec const &circle)
{
  circle.validate();
  if (circle.is_great()) {
    return cofactor_of(field, circle.plane());
  }
  return cofactor_of(field, cone_polynomial(circle));
}

bool is_homogeneous_field(SphereField const &field)
{
  for (int i = 0; i < 3; ++i) {
    auto const &p = field.component(i);
    if (!p.is_zero() && (p.degree() != 3 || !p.is_homogeneous())) {
      return false;
    }
  }
  auto const [x, y, z] = sphere_vars();
  return (field.P() * x + field.Q() * y + field.R() * z).is_zero();
}

NonGreatCircleTest homogeneous_nongreat_circle_test(SphereField const &field, Rational const &d)
{
  if (!is_homogeneous_field(field)) {
    throw std::invalid_argument("homogeneous_nongreat_circle_test: field is not homogeneous cubic");
  }
  if (d <= 0 || d >= 1) {
    throw std::invalid_argument("homogeneous_nongreat_circle_test: d must lie in (0, 1)");
  }
  NonGreatCircleTest out;
  if (field.R().is_zero()) {
    out.holds = true;
    out.degenerate = true;
    return out;
  }
  auto const [x, y, z] = sphere_vars();
  Polynomial const g = -(d * d) * (x * x + y * y + z * z) + z * z;
  auto const linear = exact_divide(field.R(), g);
  if (!linear || linear->degree() != 1 || !linear->is_homogeneous() || linear->coefficient({0, 0, 1}) != 0) {
    return out;
  }
  out.holds = true;
  out.p = linear->coefficient({1, 0, 0});
  out.q = linear->coefficient({0, 1, 0});
  return out;
}

Polynomial GreatCircleNormalForm::A_prime() const
{
  auto const [x, y, z] = sphere_vars();
  return a[0] * x * x + a[1] * y * y + a[2] * z * z + a[3] * x * y + a[4] * x * z + a[5] * y * z;
}

Polynomial GreatCircleNormalForm::B_prime() const
{
  auto const [x, y, z] = sphere_vars();
  return b[0] * x + b[1] * y + b[2] * z;
}

Polynomial GreatCircleNormalForm::C_prime() const
{
  auto const [x, y, z] = sphere_vars();
  return c[0] * x + c[1] * y + c[2] * z;
}

SphereField GreatCircleNormalForm::field() const
{
  auto const [x, y, z] = sphere_vars();
  return build_homogeneous(A_prime(), B_prime() * z, C_prime() * z);
}

std::array<Rational, 4> great_circle_equations(GreatCircleNormalForm const &form, Rational const &a,
                                               Rational const &b, Rational const &c)
{
  auto const &[a1, a2, a3, a4, a5, a6] = form.a;
  auto const &[b1, b2, b3] = form.b;
  auto const &[c1, c2, c3] = form.c;
  Rational const a2_ = a * a, b2_ = b * b, c2_ = c * c;
  Rational const e1 = b2_ * a1 + a2_ * a2 - a * b * a4;
  Rational const e2 = b * c2_ * c * a1 + a2_ * b * c * a3 - a * b * c2_ * a5 - a * c * (a2_ + c2_) * b1 +
                      a2_ * (a2_ + c2_) * b3 - a2_ * b * c * c1 + a2_ * a * b * c3;
  Rational const e3 = a * c2_ * c * a2 + a * b2_ * c * a3 - a * b * c2_ * a6 + a * b2_ * c * b2 -
                      a * b2_ * b * b3 + b * c * (b2_ + c2_) * c2 - b2_ * (b2_ + c2_) * c3;
  Rational const e4 = b2_ * c * (a2_ + 2 * b2_) * a1 - a2_ * a2_ * c * a2 - a * b2_ * b * c * a4 -
                      a * b2_ * (a2_ + b2_) * a5 + a2_ * b * (a2_ + b2_) * a6 - a * b2_ * b * c * b1 +
                      a2_ * b2_ * c * b2 + a2_ * b2_ * c * c1 - a2_ * a * b * c * c2;
  return {e1, e2, e3, e4};
}

} // namespace sphereflow
