#pragma once

#include "sphereflow/stereographic.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <vector>

namespace sphereflow {

using Real50 = boost::multiprecision::cpp_dec_float_50;

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

using RationalMatrix2 = std::array<std::array<Rational, 2>, 2>;

enum class Classification
{
  StableNode,
  UnstableNode,
  Saddle,
  StableFocus,
  UnstableFocus,
  CenterOrFocus,
  Degenerate
};

std::string_view to_string(Classification c);

enum class Provenance
{
  ClosedForm,
  Numeric,
  /// Taken from the antipodal point (the South pole lies outside the chart).
  Antipodal
};

std::string_view to_string(Provenance p);

struct SingularityReport
{
  std::array<double, 3> sphere_point{};
  /// Axis points: the exact coordinates.
  std::optional<std::array<Rational, 3>> exact_point;
  /// Extra Kolmogorov points: exact squared coordinates (x^2, y^2, z^2).
  std::optional<std::array<Rational, 3>> squared_point;
  /// Image under (x, y, z) -> (x, y)/(1 + z); absent at the South pole.
  std::optional<std::array<double, 2>> planar;
  Matrix2<double> jacobian = Matrix2<double>::Zero();
  /// c(l) = l^2 - trace l + determinant.
  double trace = 0.0, determinant = 0.0, discriminant = 0.0;
  std::array<std::complex<double>, 2> eigenvalues{};
  Classification classification = Classification::Degenerate;
  Provenance provenance = Provenance::Numeric;

  bool in_closed_disk() const;
};

/// Condition (a) A, C > 0, B < 0 or (b) A, C < 0, B > 0 on the second Kolmogorov triple.
bool kolmogorov_condition_a(KolmogorovParams const &k);
bool kolmogorov_condition_b(KolmogorovParams const &k);
/// Some of A, B, C vanish: singular points need not be isolated.
bool kolmogorov_degenerate(KolmogorovParams const &k);

/// The six axis points, then the eight points with x^2 = -C/(B-A-C), y^2 = B/(B-A-C), z^2 = -A/(B-A-C)
/// when (a) or (b) holds. Points only: no Jacobian data.
std::vector<SingularityReport> kolmogorov_singularities(KolmogorovParams const &k);

/// axis 0: (1,0,0) -> 8 diag(-B, -A); 1: (0,1,0) -> 8 diag(A, -C); 2: (0,0,1) -> 2 diag(B, C).
/// Throws std::invalid_argument for any other index.
RationalMatrix2 jacobian_axis_closed_form(KolmogorovParams const &k, int axis);

/// Symbolic partial derivatives of Pcal, Qcal, compiled once.
template <typename Scalar>
class PlanarJacobian
{
public:
  explicit PlanarJacobian(PlanarField const &planar)
    : Pu_(differentiate(planar.Pcal, 0))
    , Pv_(differentiate(planar.Pcal, 1))
    , Qu_(differentiate(planar.Qcal, 0))
    , Qv_(differentiate(planar.Qcal, 1))
  {}

  Matrix2<Scalar> operator()(Vector2<Scalar> const &p) const
  {
    Matrix2<Scalar> J;
    J << Pu_(p), Pv_(p), Qu_(p), Qv_(p);
    return J;
  }

private:
  CompiledPolynomial<Scalar> Pu_, Pv_, Qu_, Qv_;
};

template <typename Scalar>
Matrix2<Scalar> jacobian_numeric(PlanarField const &planar, Vector2<Scalar> const &point)
{
  return PlanarJacobian<Scalar>(planar)(point);
}

struct CharacteristicData
{
  double trace = 0.0, determinant = 0.0, discriminant = 0.0;
  std::array<std::complex<double>, 2> eigenvalues{};
};

CharacteristicData characteristic(Matrix2<double> const &J);

/// Trace/determinant classification; |trace| <= 1e-9 (1 + |J|) is treated as zero,
/// |det| <= 1e-9 (1 + |J|^2) as degenerate.
Classification classify(Matrix2<double> const &J);

/// Fills Jacobian, eigenvalues and classification for each report. Axis points of a Kolmogorov field
/// use the closed forms; the South pole copies its antipode.
void analyze_singularities(SphereField const &field, std::vector<SingularityReport> &reports);

/// Kolmogorov singularities with their analysis.
std::vector<SingularityReport> analyze_kolmogorov(KolmogorovParams const &k);

/// Interior point (u0, v0) = (sqrt(-C), sqrt(B)) / (sqrt(B-A-C) + sqrt(-A)) and the quantities of the
/// characteristic polynomial l^2 - (B+C)F l + BC F^2 + Pv^2, all at 50 significant digits.
struct InteriorCharacteristicData
{
  Real50 u0, v0;
  Real50 D2, F, trace, Pv, Delta;
  /// (C-B)F + 2Pv and (C-B)F - 2Pv; their product is Delta.
  Real50 factor_plus, factor_minus;
};

/// Throws std::domain_error unless condition (a) or (b) holds.
InteriorCharacteristicData interior_characteristic_data(KolmogorovParams const &k);

/// True when neither (a) nor (b) holds; the field then has no periodic orbit.
bool no_periodic_orbit_predicate(KolmogorovParams const &k);

/// Zeros of (Pcal, Qcal) in the closed unit disk: Newton from a uniform seed grid.
/// When `skip_boundary` is set, points with |p| > 1 - 1e-6 are dropped.
std::vector<std::array<double, 2>> find_planar_singularities(PlanarField const &planar, int grid = 41,
                                                             bool skip_boundary = false);

/// Both Pcal and Qcal vanish on u^2 + v^2 = 1 (exact divisibility).
bool boundary_is_singular(PlanarField const &planar);

} // namespace sphereflow
