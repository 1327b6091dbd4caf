#pragma once

#include "sphereflow/field.hpp"
#include "sphereflow/stereographic.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sphereflow {

struct IntegrationControls
{
  double rtol = 1e-8;
  double atol = 1e-10;
  double initial_step = 1e-3;
  double max_step = 0.1;
  double min_step = 1e-13;
  int max_steps = 200000;
  /// Stop when |F| drops below this (approach to a singular point).
  double stop_speed = 1e-12;
  /// Integrate F / sqrt(1 + |F|^2) instead of F: same orbits, bounded speed.
  bool bounded_speed = false;
};

enum class StopReason
{
  Completed,
  SingularApproach,
  LeftDisk,
  StepUnderflow,
  StepLimit
};

std::string_view to_string(StopReason r);

template <int N>
struct Trajectory
{
  using Point = Eigen::Matrix<double, N, 1>;
  std::vector<double> times;
  std::vector<Point> points;
  /// Accepted step sizes; steps[i] led from points[i] to points[i + 1].
  std::vector<double> steps;
  StopReason stop = StopReason::Completed;
  /// Largest ||x| - 1| removed by renormalization (sphere integration only).
  double max_drift = 0.0;
  /// Sum of the renormalization displacements.
  double total_drift = 0.0;
};

/// Dormand-Prince 5(4) with the 5th-order solution propagated and PI-free step control.
/// `rhs(point)` returns the derivative; `accept(previous, point)` may modify the accepted point and
/// returns false to stop (reason set by the callback).
template <int N, typename Rhs, typename Accept>
Trajectory<N> dormand_prince(Rhs const &rhs, Eigen::Matrix<double, N, 1> start, double duration,
                             IntegrationControls const &c, Accept &&accept)
{
  using Point = Eigen::Matrix<double, N, 1>;
  static constexpr double a21 = 1.0 / 5.0;
  static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
  static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                          a54 = -212.0 / 729.0;
  static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                          a65 = -5103.0 / 18656.0;
  static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0, b5 = -2187.0 / 6784.0,
                          b6 = 11.0 / 84.0;
  static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                          e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

  Trajectory<N> out;
  double const direction = duration < 0 ? -1.0 : 1.0;
  double const T = std::abs(duration);
  double t = 0.0;
  Point y = start;
  out.times.push_back(0.0);
  out.points.push_back(y);
  Point k1 = direction * rhs(y);
  if (k1.norm() < c.stop_speed) {
    out.stop = StopReason::SingularApproach;
    return out;
  }
  double h = std::min(c.initial_step, c.max_step);
  int steps = 0;
  while (t < T) {
    if (++steps > c.max_steps) {
      out.stop = StopReason::StepLimit;
      return out;
    }
    h = std::min({h, T - t, c.max_step});
    Point const k2 = direction * rhs(y + h * (a21 * k1));
    Point const k3 = direction * rhs(y + h * (a31 * k1 + a32 * k2));
    Point const k4 = direction * rhs(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    Point const k5 = direction * rhs(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    Point const k6 = direction * rhs(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    Point const y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    Point const k7 = direction * rhs(y5);
    Point const err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double norm = 0.0;
    for (int i = 0; i < y.size(); ++i) {
      double const scale = c.atol + c.rtol * std::max(std::abs(y(i)), std::abs(y5(i)));
      norm = std::max(norm, std::abs(err(i)) / scale);
    }
    if (!std::isfinite(norm)) {
      norm = 1e10;
    }
    if (norm <= 1.0) {
      Point accepted = y5;
      t += h;
      bool const keep_going = accept(y, accepted, out);
      y = accepted;
      out.times.push_back(direction * t);
      out.points.push_back(y);
      out.steps.push_back(h);
      if (!keep_going) {
        return out;
      }
      k1 = direction * rhs(y);
      if (k1.norm() < c.stop_speed) {
        out.stop = StopReason::SingularApproach;
        return out;
      }
    }
    double const factor = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
    h *= factor;
    if (h < c.min_step && t < T) {
      out.stop = StopReason::StepUnderflow;
      return out;
    }
  }
  return out;
}

/// Planar integration clipped to the closed unit disk. Throws std::invalid_argument when the start
/// lies outside the disk.
Trajectory<2> integrate(PlanarField const &planar, Eigen::Vector2d const &start, double duration,
                        IntegrationControls const &controls = {});

/// Integration in R^3 with renormalization onto the sphere after every step.
/// Throws std::invalid_argument unless |start| = 1 within 1e-9.
Trajectory<3> integrate_on_sphere(SphereField const &field, Eigen::Vector3d const &start, double duration,
                                  IntegrationControls const &controls = {});

} // namespace sphereflow
