#pragma once

#include "sphereflow/field.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace sphereflow {

struct Multiplicity
{
  bool infinite = false;
  int value = 0;

  static Multiplicity finite(int k) { return {false, k}; }
  static Multiplicity unbounded() { return {true, 0}; }
  friend bool operator==(Multiplicity const &, Multiplicity const &) = default;
};

/// f = 0 with X f = cofactor * f.
struct InvariantSetReport
{
  Polynomial polynomial;
  Polynomial cofactor;
  std::optional<Multiplicity> multiplicity;
};

/// P f_x + Q f_y + R f_z.
Polynomial lie_derivative(SphereField const &field, Polynomial const &f);

/// Report when f divides X f exactly. Throws std::invalid_argument for f == 0.
std::optional<InvariantSetReport> cofactor_of(SphereField const &field, Polynomial const &f);

/// X H is the zero polynomial.
bool is_first_integral(SphereField const &field, Polynomial const &H);

/// Thrown when an extactic basis is (numerically certified as) linearly dependent.
class DependentBasisError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// det[ X^j(v_i) ]_{j,i}, rows j = 0..l-1. Independence of the basis is certified by a
/// nonsingular evaluation matrix at l random rational points (5 attempts, seeded).
Polynomial extactic(SphereField const &field, std::vector<Polynomial> const &basis, std::uint64_t seed = 0x5eed);

/// Largest k with f^k | extactic; infinite when the extactic vanishes identically.
/// Throws std::invalid_argument when f is not in the span of the basis.
Multiplicity invariant_multiplicity(SphereField const &field, Polynomial const &f,
                                    std::vector<Polynomial> const &basis);

/// Field with first integrals x^2+y^2+z^2-1 and ax+by+cz:
/// f = (c g/a) y - (b g/a) z, g = -(c g/a) x + g z, h = (b g/a) x - g y (g = gamma),
/// A = (c/a) C, B = -(b/a) C. Requires a != 0.
SphereField build_integrable_family(Rational const &a, Rational const &b, Rational const &c, Rational const &gamma,
                                    Polynomial const &C);

/// z = 0 is an invariant great circle of the decomposed field: B and C restricted to z = 0 have
/// the pattern B|_{z=0} = b020 y^2 + b110 xy + b010 y, C|_{z=0} = -b110 x^2 - b020 xy - b010 x.
bool great_circle_form_check(CubicDecomposition const &d);

/// Plane ax + by + cz + d = 0 meeting the unit sphere in a circle.
struct CircleSpec
{
  Rational a, b, c, d;

  bool is_great() const { return d == 0; }
  /// d^2 / (a^2 + b^2 + c^2); the plane meets S^2 in a circle iff this is < 1.
  Rational offset_squared() const;
  /// Throws std::invalid_argument unless (a,b,c) != 0 and offset_squared() < 1.
  void validate() const;
  Polynomial plane() const;
  friend bool operator==(CircleSpec const &, CircleSpec const &) = default;
};

/// (a^2 - d^2) x^2 + (b^2 - d^2) y^2 + (c^2 - d^2) z^2 + 2ab xy + 2ac xz + 2bc yz, which equals
/// (a^2+b^2+c^2) times the cone written with the normalized plane. Throws for d == 0.
Polynomial cone_polynomial(CircleSpec const &circle);

/// Great circles test the plane itself; other circles test their cone (exact for homogeneous fields).
std::optional<InvariantSetReport> check_invariant_circle(SphereField const &field, CircleSpec const &circle);

struct NonGreatCircleTest
{
  bool holds = false;
  /// R == (p x + q y)(-d^2 (x^2+y^2+z^2) + z^2) when holds.
  Rational p, q;
  /// R == 0: holds trivially with p = q = 0.
  bool degenerate = false;
};

/// Requires a homogeneous field (Px + Qy + Rz == 0) and 0 < d < 1.
NonGreatCircleTest homogeneous_nongreat_circle_test(SphereField const &field, Rational const &d);

/// Homogeneous field with z = 0 invariant, written
/// P = A'y + B'z^2, Q = -A'x + C'z^2, R = -z(B'x + C'y) with
/// A' = a1 x^2 + a2 y^2 + a3 z^2 + a4 xy + a5 xz + a6 yz, B' = b1 x + b2 y + b3 z, C' = c1 x + c2 y + c3 z.
struct GreatCircleNormalForm
{
  std::array<Rational, 6> a;
  std::array<Rational, 3> b;
  std::array<Rational, 3> c;

  Polynomial A_prime() const;
  Polynomial B_prime() const;
  Polynomial C_prime() const;
  SphereField field() const;
};

/// The four polynomial conditions left after eliminating the cofactor from
/// X(ax+by+cz) = K'(ax+by+cz), valid for a, b, c all nonzero.
std::array<Rational, 4> great_circle_equations(GreatCircleNormalForm const &form, Rational const &a,
                                               Rational const &b, Rational const &c);

bool is_homogeneous_field(SphereField const &field);

} // namespace sphereflow
