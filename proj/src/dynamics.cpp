#include "sphereflow/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sphereflow {

std::string_view to_string(Classification c)
{
  switch (c) {
  case Classification::StableNode:
    return "stable-node";
  case Classification::UnstableNode:
    return "unstable-node";
  case Classification::Saddle:
    return "saddle";
  case Classification::StableFocus:
    return "stable-focus";
  case Classification::UnstableFocus:
    return "unstable-focus";
  case Classification::CenterOrFocus:
    return "center-or-focus";
  case Classification::Degenerate:
    return "degenerate";
  }
  return "degenerate";
}

std::string_view to_string(Provenance p)
{
  switch (p) {
  case Provenance::ClosedForm:
    return "closed-form";
  case Provenance::Numeric:
    return "numeric";
  case Provenance::Antipodal:
    return "antipodal";
  }
  return "numeric";
}

bool SingularityReport::in_closed_disk() const
{
  return planar && std::hypot((*planar)[0], (*planar)[1]) <= 1.0 + 1e-12;
}

bool kolmogorov_condition_a(KolmogorovParams const &k) { return k.a > 0 && k.c > 0 && k.b < 0; }
bool kolmogorov_condition_b(KolmogorovParams const &k) { return k.a < 0 && k.c < 0 && k.b > 0; }
bool kolmogorov_degenerate(KolmogorovParams const &k) { return k.a == 0 || k.b == 0 || k.c == 0; }

bool no_periodic_orbit_predicate(KolmogorovParams const &k)
{
  return !kolmogorov_condition_a(k) && !kolmogorov_condition_b(k);
}

namespace {

std::optional<std::array<double, 2>> project(std::array<double, 3> const &p)
{
  if (p[2] <= -1.0 + 1e-15) {
    return std::nullopt;
  }
  return std::array<double, 2>{p[0] / (1.0 + p[2]), p[1] / (1.0 + p[2])};
}

} // namespace

std::vector<SingularityReport> kolmogorov_singularities(KolmogorovParams const &k)
{
  std::vector<SingularityReport> out;
  for (int axis = 0; axis < 3; ++axis) {
    for (int s : {1, -1}) {
      SingularityReport r;
      std::array<Rational, 3> exact{Rational(0), Rational(0), Rational(0)};
      exact[axis] = s;
      r.sphere_point[axis] = s;
      r.exact_point = exact;
      r.planar = project(r.sphere_point);
      out.push_back(std::move(r));
    }
  }
  if (kolmogorov_condition_a(k) || kolmogorov_condition_b(k)) {
    Rational const denom = k.b - k.a - k.c;
    std::array<Rational, 3> const squared{Rational(-k.c / denom), Rational(k.b / denom), Rational(-k.a / denom)};
    for (int sx : {1, -1}) {
      for (int sy : {1, -1}) {
        for (int sz : {1, -1}) {
          SingularityReport r;
          r.squared_point = squared;
          std::array<int, 3> const signs{sx, sy, sz};
          for (int i = 0; i < 3; ++i) {
            r.sphere_point[i] = signs[i] * std::sqrt(squared[i].get_d());
          }
          r.planar = project(r.sphere_point);
          out.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

RationalMatrix2 jacobian_axis_closed_form(KolmogorovParams const &k, int axis)
{
  Rational const zero(0);
  switch (axis) {
  case 0:
    return {{{Rational(-8 * k.b), zero}, {zero, Rational(-8 * k.a)}}};
  case 1:
    return {{{Rational(8 * k.a), zero}, {zero, Rational(-8 * k.c)}}};
  case 2:
    return {{{Rational(2 * k.b), zero}, {zero, Rational(2 * k.c)}}};
  default:
    throw std::invalid_argument("jacobian_axis_closed_form: axis must be 0, 1 or 2");
  }
}

CharacteristicData characteristic(Matrix2<double> const &J)
{
  CharacteristicData out;
  out.trace = J.trace();
  out.determinant = J(0, 0) * J(1, 1) - J(0, 1) * J(1, 0);
  out.discriminant = out.trace * out.trace - 4.0 * out.determinant;
  if (out.discriminant >= 0) {
    double const root = std::sqrt(out.discriminant);
    // Larger-magnitude root first, the other from the product to avoid cancellation.
    double const q = 0.5 * (out.trace + std::copysign(root, out.trace));
    if (q == 0.0) {
      out.eigenvalues = {std::complex<double>(0.0), std::complex<double>(0.0)};
    } else {
      out.eigenvalues = {std::complex<double>(q), std::complex<double>(out.determinant / q)};
    }
  } else {
    double const im = 0.5 * std::sqrt(-out.discriminant);
    out.eigenvalues = {std::complex<double>(0.5 * out.trace, im), std::complex<double>(0.5 * out.trace, -im)};
  }
  return out;
}

Classification classify(Matrix2<double> const &J)
{
  CharacteristicData const c = characteristic(J);
  double const norm = J.norm();
  double const tau_tol = 1e-9 * (1.0 + norm);
  double const det_tol = 1e-9 * (1.0 + norm * norm);
  if (std::abs(c.determinant) <= det_tol) {
    return Classification::Degenerate;
  }
  if (c.determinant < 0) {
    return Classification::Saddle;
  }
  if (c.discriminant >= -det_tol) {
    return c.trace < 0 ? Classification::StableNode : Classification::UnstableNode;
  }
  if (std::abs(c.trace) <= tau_tol) {
    return Classification::CenterOrFocus;
  }
  return c.trace < 0 ? Classification::StableFocus : Classification::UnstableFocus;
}

namespace {

void fill(SingularityReport &r, Matrix2<double> const &J, Provenance provenance)
{
  r.jacobian = J;
  CharacteristicData const c = characteristic(J);
  r.trace = c.trace;
  r.determinant = c.determinant;
  r.discriminant = c.discriminant;
  r.eigenvalues = c.eigenvalues;
  r.classification = classify(J);
  r.provenance = provenance;
}

Matrix2<double> to_double(RationalMatrix2 const &m)
{
  Matrix2<double> J;
  J << m[0][0].get_d(), m[0][1].get_d(), m[1][0].get_d(), m[1][1].get_d();
  return J;
}

} // namespace

void analyze_singularities(SphereField const &field, std::vector<SingularityReport> &reports)
{
  PlanarField const planar = pushforward(field);
  PlanarJacobian<double> const jacobian(planar);
  // The antipodal map carries X to Y(q) = -X(-q); the South pole of X is the North pole of Y.
  SphereField const mirrored = [&] {
    SphereField const a = antipodal_image(field);
    return SphereField::from_components(-a.P(), -a.Q(), -a.R());
  }();
  std::optional<PlanarJacobian<double>> mirrored_jacobian;
  auto const &kolmogorov = field.kolmogorov();
  for (auto &r : reports) {
    if (kolmogorov && r.exact_point) {
      int axis = 0;
      while (axis < 3 && (*r.exact_point)[axis] == 0) {
        ++axis;
      }
      if (axis < 3) {
        fill(r, to_double(jacobian_axis_closed_form(*kolmogorov, axis)), Provenance::ClosedForm);
        continue;
      }
    }
    if (r.planar) {
      fill(r, jacobian(Vector2<double>((*r.planar)[0], (*r.planar)[1])), Provenance::Numeric);
    } else {
      if (!mirrored_jacobian) {
        mirrored_jacobian.emplace(pushforward(mirrored));
      }
      fill(r, (*mirrored_jacobian)(Vector2<double>(0.0, 0.0)), Provenance::Antipodal);
    }
  }
}

std::vector<SingularityReport> analyze_kolmogorov(KolmogorovParams const &k)
{
  auto reports = kolmogorov_singularities(k);
  analyze_singularities(build_kolmogorov(k), reports);
  return reports;
}

InteriorCharacteristicData interior_characteristic_data(KolmogorovParams const &k)
{
  bool const a = kolmogorov_condition_a(k);
  if (!a && !kolmogorov_condition_b(k)) {
    throw std::domain_error("interior_characteristic_data: neither condition (a) nor (b) holds");
  }
  using boost::multiprecision::abs;
  using boost::multiprecision::sqrt;
  Real50 const A = rational_cast<Real50>(k.a);
  Real50 const B = rational_cast<Real50>(k.b);
  Real50 const C = rational_cast<Real50>(k.c);
  InteriorCharacteristicData out;
  // sqrt(-A) sqrt(B-A-C): both radicands negative under (a), both positive under (b).
  Real50 const product = sqrt((-A) * (B - A - C));
  out.D2 = B - 2 * A - C + (a ? -2 : 2) * product;
  Real50 const ratio = (out.D2 + C - B) / out.D2;
  out.F = 8 * A / out.D2 + 2 * ratio * ratio;
  out.trace = (B + C) * out.F;
  Real50 const r = sqrt(-B * C);
  out.Pv = 16 * A * r / out.D2 + 8 * (C - B) * r / out.D2 * ratio;
  out.Delta = (C - B) * (C - B) * out.F * out.F - 4 * out.Pv * out.Pv;
  out.factor_plus = (C - B) * out.F + 2 * out.Pv;
  out.factor_minus = (C - B) * out.F - 2 * out.Pv;
  Real50 const denom = sqrt(abs(B - A - C)) + sqrt(abs(A));
  out.u0 = sqrt(abs(C)) / denom;
  out.v0 = sqrt(abs(B)) / denom;
  return out;
}

bool boundary_is_singular(PlanarField const &planar)
{
  Polynomial const circle = unit_circle_polynomial();
  return exact_divide(planar.Pcal, circle).has_value() && exact_divide(planar.Qcal, circle).has_value();
}

std::vector<std::array<double, 2>> find_planar_singularities(PlanarField const &planar, int grid, bool skip_boundary)
{
  CompiledPolynomial<double> const P(planar.Pcal), Q(planar.Qcal);
  PlanarJacobian<double> const jacobian(planar);
  double scale = 0.0;
  for (auto const *p : {&planar.Pcal, &planar.Qcal}) {
    for (auto const &[e, c] : p->terms()) {
      scale = std::max(scale, std::abs(c.get_d()));
    }
  }
  std::vector<std::array<double, 2>> found;
  if (scale == 0.0) {
    return found;
  }
  grid = std::max(grid, 3);
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      Vector2<double> p(-1.0 + 2.0 * i / (grid - 1), -1.0 + 2.0 * j / (grid - 1));
      if (p.norm() > 1.0) {
        continue;
      }
      bool converged = false;
      for (int it = 0; it < 60; ++it) {
        Vector2<double> const F(P(p), Q(p));
        if (F.norm() <= 1e-13 * scale) {
          converged = true;
          break;
        }
        Vector2<double> const step = jacobian(p).colPivHouseholderQr().solve(-F);
        if (!step.allFinite()) {
          break;
        }
        p += step;
        if (p.norm() > 2.0) {
          break;
        }
        if (step.norm() < 1e-15) {
          converged = Vector2<double>(P(p), Q(p)).norm() <= 1e-9 * scale;
          break;
        }
      }
      if (!converged || p.norm() > 1.0 + 1e-9 || (skip_boundary && p.norm() > 1.0 - 1e-6)) {
        continue;
      }
      if (std::none_of(found.begin(), found.end(),
                       [&](auto const &q) { return std::hypot(q[0] - p(0), q[1] - p(1)) < 1e-5; })) {
        found.push_back({p(0), p(1)});
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

} // namespace sphereflow
