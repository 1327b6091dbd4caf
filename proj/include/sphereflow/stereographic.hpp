#pragma once

#include "sphereflow/field.hpp"
#include "sphereflow/sturm.hpp"

namespace sphereflow {

/// Planar system u' = Pcal, v' = Qcal obtained by projecting from the South pole
/// (u, v) = (x, y) / (1 + z), after multiplying time by a positive factor.
struct PlanarField
{
  Polynomial Pcal{VarSpace::Plane}, Qcal{VarSpace::Plane};
  /// Homogenized images of P, Q, R under x = 2u, y = 2v, z = 1 - u^2 - v^2, w = 1 + u^2 + v^2.
  Polynomial Ptilde{VarSpace::Plane}, Qtilde{VarSpace::Plane}, Rtilde{VarSpace::Plane};

  friend bool operator==(PlanarField const &, PlanarField const &) = default;
};

/// Requires a tangent field of degree <= 3 (std::invalid_argument otherwise).
PlanarField pushforward(SphereField const &field);

/// u Pcal + v Qcal. Throws std::logic_error unless it equals -(1/2)(u^2 + v^2 + 1) Rtilde.
Polynomial radial_derivative(PlanarField const &planar);

/// u^2 + v^2 - 1
Polynomial unit_circle_polynomial();

struct PeriodicityVerdict
{
  bool periodic = false;
  /// g == 0: every point of the great circle is singular.
  bool degenerate = false;
  /// g(u, v) = A(u, v, 0), the restriction that decides periodicity.
  Polynomial g{VarSpace::Plane};
  /// g((1 - t^2)/(1 + t^2), 2t/(1 + t^2)) (1 + t^2)^2
  UnivariatePolynomial boundary;
  RealRootCount sturm;
  /// g(-1, 0), the point the parametrization misses.
  Rational excluded_value;
};

/// z = 0 is a periodic orbit iff g and u^2 + v^2 - 1 have no common real zero. The decision is exact
/// (Sturm sequence over Q). Throws std::invalid_argument unless great_circle_form_check(d) holds.
PeriodicityVerdict great_circle_is_periodic(CubicDecomposition const &d);

} // namespace sphereflow
