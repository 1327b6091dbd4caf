#include "sphereflow/integrator.hpp"

namespace sphereflow {

std::string_view to_string(StopReason r)
{
  switch (r) {
  case StopReason::Completed:
    return "completed";
  case StopReason::SingularApproach:
    return "singular-approach";
  case StopReason::LeftDisk:
    return "left-disk";
  case StopReason::StepUnderflow:
    return "step-underflow";
  case StopReason::StepLimit:
    return "step-limit";
  }
  return "completed";
}

namespace {

template <int N>
Eigen::Matrix<double, N, 1> bounded(Eigen::Matrix<double, N, 1> const &F, bool enabled)
{
  return enabled ? Eigen::Matrix<double, N, 1>(F / std::sqrt(1.0 + F.squaredNorm())) : F;
}

} // namespace

Trajectory<2> integrate(PlanarField const &planar, Eigen::Vector2d const &start, double duration,
                        IntegrationControls const &controls)
{
  if (!(start.norm() <= 1.0 + 1e-12)) {
    throw std::invalid_argument("integrate: start lies outside the closed unit disk");
  }
  CompiledPolynomial<double> const P(planar.Pcal), Q(planar.Qcal);
  auto rhs = [&](Eigen::Vector2d const &p) {
    return bounded<2>(Eigen::Vector2d(P(p), Q(p)), controls.bounded_speed);
  };
  auto accept = [](Eigen::Vector2d const &previous, Eigen::Vector2d &p, Trajectory<2> &out) {
    double const r = p.norm();
    if (r <= 1.0) {
      return true;
    }
    if (r - 1.0 <= 1e-6) {
      p /= r;
      return true;
    }
    // Linear interpolation to the crossing of the unit circle.
    Eigen::Vector2d const d = p - previous;
    double const a = d.squaredNorm(), b = 2.0 * previous.dot(d), c = previous.squaredNorm() - 1.0;
    double const s = std::clamp((-b + std::sqrt(std::max(0.0, b * b - 4 * a * c))) / (2 * a), 0.0, 1.0);
    p = previous + s * d;
    out.stop = StopReason::LeftDisk;
    return false;
  };
  Eigen::Vector2d begin = start;
  if (begin.norm() > 1.0) {
    begin /= begin.norm();
  }
  return dormand_prince<2>(rhs, begin, duration, controls, accept);
}

Trajectory<3> integrate_on_sphere(SphereField const &field, Eigen::Vector3d const &start, double duration,
                                  IntegrationControls const &controls)
{
  if (std::abs(start.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("integrate_on_sphere: start is not on the unit sphere");
  }
  CompiledPolynomial<double> const P(field.P()), Q(field.Q()), R(field.R());
  auto rhs = [&](Eigen::Vector3d const &p) {
    return bounded<3>(Eigen::Vector3d(P(p), Q(p), R(p)), controls.bounded_speed);
  };
  auto accept = [](Eigen::Vector3d const &, Eigen::Vector3d &p, Trajectory<3> &out) {
    double const r = p.norm();
    double const drift = std::abs(r - 1.0);
    out.max_drift = std::max(out.max_drift, drift);
    out.total_drift += drift;
    p /= r;
    return true;
  };
  return dormand_prince<3>(rhs, start, duration, controls, accept);
}

} // namespace sphereflow
