#pragma once

#include "sphereflow/polynomial.hpp"

#include <optional>
#include <string_view>

namespace sphereflow {

enum class Family
{
  GeneralCubic,
  Kolmogorov,
  HomogeneousCubic,
  Unverified
};

std::string_view to_string(Family family);

/// P = (1 - |r|^2) f + A y + B z,  Q = (1 - |r|^2) g - A x + C z,  R = (1 - |r|^2) h - B x - C y
/// with f, g, h of degree <= 1 and A, B, C of degree <= 2 without constant term.
struct CubicDecomposition
{
  Polynomial f, g, h, A, B, C;

  friend bool operator==(CubicDecomposition const &, CubicDecomposition const &) = default;
};

/// Kolmogorov coefficients; the second triple is written A, B, C in the phase-portrait setting.
struct KolmogorovParams
{
  Rational alpha, beta, gamma, a, b, c;

  friend bool operator==(KolmogorovParams const &, KolmogorovParams const &) = default;
};

/// A polynomial vector field (P, Q, R) in R^3. Unless tagged Unverified, the field is tangent
/// to the unit sphere: 2(Px + Qy + Rz) = K (x^2 + y^2 + z^2 - 1) with K stored as sphere_cofactor.
class SphereField
{
public:
  /// Raw triple; classified when tangent (Kolmogorov, homogeneous or general cubic).
  static SphereField from_components(Polynomial P, Polynomial Q, Polynomial R);

  Polynomial const &P() const { return P_; }
  Polynomial const &Q() const { return Q_; }
  Polynomial const &R() const { return R_; }
  Polynomial const &component(int i) const { return i == 0 ? P_ : (i == 1 ? Q_ : R_); }
  Family family() const { return family_; }
  bool is_tangent() const { return family_ != Family::Unverified; }
  int degree() const;

  std::optional<CubicDecomposition> const &decomposition() const { return decomposition_; }
  std::optional<KolmogorovParams> const &kolmogorov() const { return kolmogorov_; }
  std::optional<Polynomial> const &sphere_cofactor() const { return sphere_cofactor_; }

  friend SphereField operator+(SphereField const &lhs, SphereField const &rhs);
  friend bool operator==(SphereField const &lhs, SphereField const &rhs);

private:
  friend SphereField build_cubic(CubicDecomposition const &d);
  friend SphereField build_kolmogorov(KolmogorovParams const &k);
  friend SphereField build_homogeneous(Polynomial const &A, Polynomial const &B, Polynomial const &C);

  SphereField(Polynomial P, Polynomial Q, Polynomial R, Family family);

  Polynomial P_, Q_, R_;
  Family family_;
  std::optional<CubicDecomposition> decomposition_;
  std::optional<KolmogorovParams> kolmogorov_;
  std::optional<Polynomial> sphere_cofactor_;
};

/// Throws std::invalid_argument on degree / constant-term violations.
SphereField build_cubic(CubicDecomposition const &d);

SphereField build_kolmogorov(KolmogorovParams const &k);

/// P = Ay + Bz, Q = -Ax + Cz, R = -Bx - Cy with A, B, C homogeneous quadratics (or zero).
SphereField build_homogeneous(Polynomial const &A, Polynomial const &B, Polynomial const &C);

/// K with 2(Px + Qy + Rz) = K (x^2 + y^2 + z^2 - 1), or nullopt when no polynomial K exists.
std::optional<Polynomial> tangency_cofactor(Polynomial const &P, Polynomial const &Q, Polynomial const &R);
std::optional<Polynomial> tangency_cofactor(SphereField const &field);

/// Canonical representative modulo the syzygy (A, B, C) ~ (A + Mz, B - My, C + Mx):
/// A carries no monomial divisible by z.
CubicDecomposition canonicalize(CubicDecomposition const &d);

/// Recovers f, g, h from the degree <= 1 parts and solves exactly for the canonical A, B, C.
/// Throws std::domain_error when the field is not tangent to the sphere.
CubicDecomposition decompose_cubic(SphereField const &field);

/// Substitutes (-x, -y, -z) into every component.
SphereField antipodal_image(SphereField const &field);

} // namespace sphereflow
