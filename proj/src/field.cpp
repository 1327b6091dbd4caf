#include "sphereflow/field.hpp"

#include "sphereflow/linear_exact.hpp"

#include <array>
#include <set>
#include <stdexcept>

namespace sphereflow {

namespace {

Polynomial one_minus_r2()
{
  return -sphere_polynomial();
}

void require_sphere_space(Polynomial const &p, char const *name)
{
  if (!p.is_constant() && p.space() != VarSpace::Sphere) {
    throw std::invalid_argument(std::string(name) + " must be a polynomial in x, y, z");
  }
}

void check_decomposition(CubicDecomposition const &d)
{
  for (auto const &[p, name] : {std::pair{&d.f, "f"}, std::pair{&d.g, "g"}, std::pair{&d.h, "h"}}) {
    require_sphere_space(*p, name);
    if (p->degree() > 1) {
      throw std::invalid_argument(std::string(name) + " must have degree <= 1");
    }
  }
  for (auto const &[p, name] : {std::pair{&d.A, "A"}, std::pair{&d.B, "B"}, std::pair{&d.C, "C"}}) {
    require_sphere_space(*p, name);
    if (p->degree() > 2) {
      throw std::invalid_argument(std::string(name) + " must have degree <= 2");
    }
    if (p->constant_term() != 0) {
      throw std::invalid_argument(std::string(name) + " must have no constant term");
    }
  }
}

std::array<Polynomial, 3> assemble(CubicDecomposition const &d)
{
  auto const [x, y, z] = sphere_vars();
  Polynomial const s = one_minus_r2();
  return {s * d.f + d.A * y + d.B * z, s * d.g - d.A * x + d.C * z, s * d.h - d.B * x - d.C * y};
}

bool components_homogeneous_cubic(Polynomial const &P, Polynomial const &Q, Polynomial const &R)
{
  for (auto const *p : {&P, &Q, &R}) {
    if (!p->is_zero() && (p->degree() != 3 || !p->is_homogeneous())) {
      return false;
    }
  }
  return true;
}

std::optional<KolmogorovParams> match_kolmogorov(Polynomial const &P, Polynomial const &Q, Polynomial const &R,
                                                 CubicDecomposition const &d)
{
  KolmogorovParams k{d.f.coefficient({1, 0, 0}), d.g.coefficient({0, 1, 0}), d.h.coefficient({0, 0, 1}),
                     d.A.coefficient({1, 1, 0}), d.B.coefficient({1, 0, 1}), d.C.coefficient({0, 1, 1})};
  SphereField const candidate = build_kolmogorov(k);
  if (candidate.P() == P && candidate.Q() == Q && candidate.R() == R) {
    return k;
  }
  return std::nullopt;
}

} // namespace

std::string_view to_string(Family family)
{
  switch (family) {
  case Family::GeneralCubic:
    return "general-cubic";
  case Family::Kolmogorov:
    return "kolmogorov";
  case Family::HomogeneousCubic:
    return "homogeneous-cubic";
  case Family::Unverified:
    return "unverified";
  }
  return "unverified";
}

SphereField::SphereField(Polynomial P, Polynomial Q, Polynomial R, Family family)
  : P_(std::move(P).in_space(VarSpace::Sphere))
  , Q_(std::move(Q).in_space(VarSpace::Sphere))
  , R_(std::move(R).in_space(VarSpace::Sphere))
  , family_(family)
{}

int SphereField::degree() const { return std::max({P_.degree(), Q_.degree(), R_.degree()}); }

SphereField SphereField::from_components(Polynomial P, Polynomial Q, Polynomial R)
{
  require_sphere_space(P, "P");
  require_sphere_space(Q, "Q");
  require_sphere_space(R, "R");
  SphereField field(std::move(P), std::move(Q), std::move(R), Family::Unverified);
  if (field.degree() > 3) {
    return field;
  }
  auto cofactor = tangency_cofactor(field.P_, field.Q_, field.R_);
  if (!cofactor) {
    return field;
  }
  field.family_ = Family::GeneralCubic;
  field.sphere_cofactor_ = std::move(cofactor);
  field.decomposition_ = decompose_cubic(field);
  if (auto k = match_kolmogorov(field.P_, field.Q_, field.R_, *field.decomposition_)) {
    field.family_ = Family::Kolmogorov;
    field.kolmogorov_ = k;
  } else if (components_homogeneous_cubic(field.P_, field.Q_, field.R_)) {
    field.family_ = Family::HomogeneousCubic;
  }
  return field;
}

SphereField operator+(SphereField const &lhs, SphereField const &rhs)
{
  return SphereField::from_components(lhs.P_ + rhs.P_, lhs.Q_ + rhs.Q_, lhs.R_ + rhs.R_);
}

bool operator==(SphereField const &lhs, SphereField const &rhs)
{
  return lhs.P_ == rhs.P_ && lhs.Q_ == rhs.Q_ && lhs.R_ == rhs.R_;
}

std::optional<Polynomial> tangency_cofactor(Polynomial const &P, Polynomial const &Q, Polynomial const &R)
{
  auto const [x, y, z] = sphere_vars();
  return exact_divide(Rational(2) * (P * x + Q * y + R * z), sphere_polynomial());
}

std::optional<Polynomial> tangency_cofactor(SphereField const &field)
{
  return tangency_cofactor(field.P(), field.Q(), field.R());
}

SphereField build_cubic(CubicDecomposition const &d)
{
  check_decomposition(d);
  auto [P, Q, R] = assemble(d);
  SphereField field(std::move(P), std::move(Q), std::move(R), Family::GeneralCubic);
  auto const [x, y, z] = sphere_vars();
  Polynomial expected = Rational(-2) * (d.f * x + d.g * y + d.h * z);
  auto cofactor = tangency_cofactor(field);
  if (!cofactor || *cofactor != expected) {
    throw std::logic_error("build_cubic: assembled field failed the tangency identity");
  }
  field.sphere_cofactor_ = std::move(expected);
  field.decomposition_ = d;
  if (auto k = match_kolmogorov(field.P_, field.Q_, field.R_, canonicalize(d))) {
    field.family_ = Family::Kolmogorov;
    field.kolmogorov_ = k;
  } else if (components_homogeneous_cubic(field.P_, field.Q_, field.R_)) {
    field.family_ = Family::HomogeneousCubic;
  }
  return field;
}

SphereField build_kolmogorov(KolmogorovParams const &k)
{
  auto const [x, y, z] = sphere_vars();
  Polynomial const s = one_minus_r2();
  Polynomial P = x * (k.alpha * s + k.a * y * y + k.b * z * z);
  Polynomial Q = y * (k.beta * s - k.a * x * x + k.c * z * z);
  Polynomial R = z * (k.gamma * s - k.b * x * x - k.c * y * y);
  SphereField field(std::move(P), std::move(Q), std::move(R), Family::Kolmogorov);
  CubicDecomposition d{k.alpha * x, k.beta * y, k.gamma * z, k.a * x * y, k.b * x * z, k.c * y * z};
  auto cofactor = tangency_cofactor(field);
  if (!cofactor) {
    throw std::logic_error("build_kolmogorov: field failed the tangency identity");
  }
  field.sphere_cofactor_ = std::move(cofactor);
  field.decomposition_ = std::move(d);
  field.kolmogorov_ = k;
  return field;
}

SphereField build_homogeneous(Polynomial const &A, Polynomial const &B, Polynomial const &C)
{
  for (auto const &[p, name] : {std::pair{&A, "A"}, std::pair{&B, "B"}, std::pair{&C, "C"}}) {
    require_sphere_space(*p, name);
    if (!p->is_zero() && (p->degree() != 2 || !p->is_homogeneous())) {
      throw std::invalid_argument(std::string(name) + " must be a homogeneous quadratic or zero");
    }
  }
  auto const [x, y, z] = sphere_vars();
  SphereField field(A * y + B * z, -(A * x) + C * z, -(B * x) - C * y, Family::HomogeneousCubic);
  field.sphere_cofactor_ = Polynomial();
  field.decomposition_ = CubicDecomposition{Polynomial(), Polynomial(), Polynomial(), A, B, C};
  return field;
}

CubicDecomposition canonicalize(CubicDecomposition const &d)
{
  auto const [x, y, z] = sphere_vars();
  Polynomial::Terms shifted;
  for (auto const &[e, c] : d.A.terms()) {
    if (e[2] > 0) {
      shifted.emplace(Exponents{e[0], e[1], e[2] - 1}, c);
    }
  }
  Polynomial const M(VarSpace::Sphere, std::move(shifted));
  return {d.f, d.g, d.h, d.A - M * z, d.B + M * y, d.C - M * x};
}

CubicDecomposition decompose_cubic(SphereField const &field)
{
  if (field.degree() > 3) {
    throw std::domain_error("decompose_cubic: field degree exceeds 3");
  }
  if (!tangency_cofactor(field)) {
    throw std::domain_error("decompose_cubic: field is not tangent to the sphere");
  }
  auto const [x, y, z] = sphere_vars();
  Polynomial const s = one_minus_r2();
  CubicDecomposition out;
  out.f = homogeneous_component(field.P(), 1) + homogeneous_component(field.P(), 0);
  out.g = homogeneous_component(field.Q(), 1) + homogeneous_component(field.Q(), 0);
  out.h = homogeneous_component(field.R(), 1) + homogeneous_component(field.R(), 0);
  std::array<Polynomial, 3> const residual{field.P() - s * out.f, field.Q() - s * out.g, field.R() - s * out.h};

  std::vector<Exponents> const all_monomials{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {1, 1, 0},
                                             {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  std::vector<Exponents> const a_monomials{{1, 0, 0}, {0, 1, 0}, {2, 0, 0}, {1, 1, 0}, {0, 2, 0}};

  // Column j contributes `contribution[j]` to (P, Q, R).
  struct Unknown
  {
    int block; // 0 = A, 1 = B, 2 = C
    Exponents monomial;
    std::array<Polynomial, 3> contribution;
  };
  std::vector<Unknown> unknowns;
  for (auto const &e : a_monomials) {
    Polynomial const m = Polynomial::monomial(e, 1);
    unknowns.push_back({0, e, {m * y, -(m * x), Polynomial()}});
  }
  for (auto const &e : all_monomials) {
    Polynomial const m = Polynomial::monomial(e, 1);
    unknowns.push_back({1, e, {m * z, Polynomial(), -(m * x)}});
  }
  for (auto const &e : all_monomials) {
    Polynomial const m = Polynomial::monomial(e, 1);
    unknowns.push_back({2, e, {Polynomial(), m * z, -(m * y)}});
  }

  std::set<Exponents, GradedLexGreater> rows_monomials;
  for (auto const &r : residual) {
    for (auto const &[e, c] : r.terms()) {
      rows_monomials.insert(e);
    }
  }
  for (auto const &u : unknowns) {
    for (auto const &p : u.contribution) {
      for (auto const &[e, c] : p.terms()) {
        rows_monomials.insert(e);
      }
    }
  }

  std::vector<RationalRow> matrix;
  std::vector<Rational> rhs;
  for (int comp = 0; comp < 3; ++comp) {
    for (auto const &e : rows_monomials) {
      RationalRow row;
      row.reserve(unknowns.size());
      for (auto const &u : unknowns) {
        row.push_back(u.contribution[comp].coefficient(e));
      }
      matrix.push_back(std::move(row));
      rhs.push_back(residual[comp].coefficient(e));
    }
  }
  auto const solution = solve_exact(std::move(matrix), std::move(rhs));
  if (!solution) {
    throw std::domain_error("decompose_cubic: residual system is inconsistent");
  }
  std::array<Polynomial, 3> blocks{Polynomial(), Polynomial(), Polynomial()};
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    blocks[unknowns[j].block] += Polynomial::monomial(unknowns[j].monomial, (*solution)[j]);
  }
  out.A = blocks[0];
  out.B = blocks[1];
  out.C = blocks[2];
  return out;
}

SphereField antipodal_image(SphereField const &field)
{
  auto const [x, y, z] = sphere_vars();
  std::array<Polynomial, 3> const flip{-x, -y, -z};
  return SphereField::from_components(substitute(field.P(), flip), substitute(field.Q(), flip),
                                      substitute(field.R(), flip));
}

} // namespace sphereflow
