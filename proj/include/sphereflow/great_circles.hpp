#pragma once

#include "sphereflow/darboux.hpp"

#include <array>
#include <optional>
#include <vector>

namespace sphereflow {

struct GreatCircleSearch
{
  /// Fibonacci grid size over the whole sphere.
  int grid_points = 10000;
  /// Accept a refined direction when the RMS residual, relative to the field's coefficient scale, is below this.
  double tolerance = 1e-10;
  int max_iterations = 60;
  /// Local minima refined at most; more than this sets budget_exhausted.
  int max_candidates = 400;
  /// Largest denominator tried when snapping a direction to rationals.
  long max_denominator = 1000;
};

struct GreatCircleCandidate
{
  /// Unit normal, sign fixed so the first nonzero component is positive.
  std::array<double, 3> direction{};
  double residual = 0.0;
  /// Rational plane (d = 0) and cofactor when exact certification succeeded.
  std::optional<CircleSpec> exact;
  std::optional<Polynomial> cofactor;

  bool certified() const { return exact.has_value(); }
};

struct GreatCircleResult
{
  /// The search found a continuum of invariant planes; no enumeration is attempted.
  bool infinite = false;
  bool budget_exhausted = false;
  std::vector<GreatCircleCandidate> circles;

  int certified_count() const;
};

/// Invariant great circles {ax + by + cz = 0} of a homogeneous cubic field.
/// A direction n is invariant iff n.(P,Q,R) vanishes on the plane n.r = 0; the search minimizes the
/// mean square of that restriction over eight points of the plane's unit circle, seeded from a
/// Fibonacci grid and refined by Levenberg-Marquardt. Throws std::invalid_argument for non-homogeneous input.
GreatCircleResult solve_great_circles_homogeneous(SphereField const &field, GreatCircleSearch const &search = {});

/// Case of the great-circle count a plane falls under: 1 when a = 0 or b = 0, 2 when c = 0, 3 otherwise.
int great_circle_case(CircleSpec const &circle);

} // namespace sphereflow
