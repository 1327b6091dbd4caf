#include "catch_amalgamated.hpp"

#include "sphereflow/darboux.hpp"
#include "sphereflow/dynamics.hpp"
#include "sphereflow/integrator.hpp"
#include "support.hpp"

#include <cmath>
#include <numbers>

using namespace sphereflow;
using testing::poly;

namespace {

KolmogorovParams kolmo(int A, int B, int C) { return {0, 0, 0, A, B, C}; }

double to_double(Real50 const &x) { return x.convert_to<double>(); }

Matrix2<double> to_double(RationalMatrix2 const &m)
{
  Matrix2<double> out;
  out << m[0][0].get_d(), m[0][1].get_d(), m[1][0].get_d(), m[1][1].get_d();
  return out;
}

std::array<double, 2> project(std::array<double, 3> const &p) { return {p[0] / (1 + p[2]), p[1] / (1 + p[2])}; }

} // namespace

TEST_CASE("kolmogorov_singularities", "[dynamics]")
{
  SECTION("A = 5, B = -1, C = 2")
  {
    KolmogorovParams const k = kolmo(5, -1, 2);
    auto const points = kolmogorov_singularities(k);
    REQUIRE(points.size() == 14);
    SphereField const X = build_kolmogorov(k);
    for (std::size_t i = 6; i < points.size(); ++i) {
      REQUIRE(points[i].squared_point);
      auto const &[x2, y2, z2] = *points[i].squared_point;
      CHECK(x2 == Rational(1, 4));
      CHECK(y2 == Rational(1, 8));
      CHECK(z2 == Rational(5, 8));
      // Field components divided by x, y, z respectively, evaluated on squared coordinates.
      CHECK(k.a * y2 + k.b * z2 == 0);
      CHECK(-k.a * x2 + k.c * z2 == 0);
      CHECK(-k.b * x2 - k.c * y2 == 0);
      auto const &p = points[i].sphere_point;
      CHECK(std::abs(evaluate(X.P(), {p[0], p[1], p[2]})) < 1e-14);
      CHECK(std::abs(evaluate(X.Q(), {p[0], p[1], p[2]})) < 1e-14);
      CHECK(std::abs(evaluate(X.R(), {p[0], p[1], p[2]})) < 1e-14);
    }
  }
  SECTION("A = B = C = 1: axis points only")
  {
    auto const points = kolmogorov_singularities(kolmo(1, 1, 1));
    CHECK(points.size() == 6);
    for (auto const &p : points) {
      CHECK(p.exact_point);
    }
  }
  SECTION("A = C = -1, B = 1: condition (b)")
  {
    CHECK(kolmogorov_condition_b(kolmo(-1, 1, -1)));
    CHECK(kolmogorov_singularities(kolmo(-1, 1, -1)).size() == 14);
  }
  SECTION("random parameters")
  {
    testing::Random rng(51);
    for (int i = 0; i < 100; ++i) {
      KolmogorovParams const k = rng.kolmogorov_nonzero();
      auto const points = kolmogorov_singularities(k);
      bool const extra = kolmogorov_condition_a(k) || kolmogorov_condition_b(k);
      CHECK(points.size() == (extra ? 14u : 6u));
      for (std::size_t j = 6; j < points.size(); ++j) {
        auto const &[x2, y2, z2] = *points[j].squared_point;
        CHECK(x2 + y2 + z2 == 1);
        CHECK(k.a * y2 + k.b * z2 == 0);
        CHECK(-k.a * x2 + k.c * z2 == 0);
        CHECK(-k.b * x2 - k.c * y2 == 0);
      }
      for (auto const &p : points) {
        if (p.planar) {
          auto const image = project(p.sphere_point);
          CHECK((*p.planar)[0] == Catch::Approx(image[0]).margin(1e-14));
          CHECK((*p.planar)[1] == Catch::Approx(image[1]).margin(1e-14));
        }
      }
    }
  }
}

TEST_CASE("jacobian_axis_closed_form", "[dynamics]")
{
  RationalMatrix2 const J = jacobian_axis_closed_form(kolmo(5, -1, 2), 0);
  CHECK(J[0][0] == 8);
  CHECK(J[1][1] == -40);
  CHECK(J[0][1] == 0);
  CHECK(J[1][0] == 0);
  RationalMatrix2 const zero = jacobian_axis_closed_form(kolmo(0, 0, 0), 1);
  for (auto const &row : zero) {
    for (auto const &e : row) CHECK(e == 0);
  }
  RationalMatrix2 const north = jacobian_axis_closed_form(kolmo(1, 1, 1), 2);
  CHECK(north[0][0] == 2);
  CHECK(north[1][1] == 2);
  CHECK(classify(to_double(north)) == Classification::UnstableNode);
  CHECK_THROWS_AS(jacobian_axis_closed_form(kolmo(1, 1, 1), 3), std::invalid_argument);
}

TEST_CASE("axis Jacobians: numeric agrees with closed form", "[dynamics][property]")
{
  testing::Random rng(52);
  std::array<Vector2<double>, 3> const images{Vector2<double>(1, 0), Vector2<double>(0, 1), Vector2<double>(0, 0)};
  for (int i = 0; i < 100; ++i) {
    KolmogorovParams const k = rng.kolmogorov();
    PlanarJacobian<double> const jac(pushforward(build_kolmogorov(k)));
    for (int axis = 0; axis < 3; ++axis) {
      Matrix2<double> const numeric = jac(images[axis]);
      Matrix2<double> const closed = to_double(jacobian_axis_closed_form(k, axis));
      CHECK((numeric - closed).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
  PlanarField const zero = pushforward(build_homogeneous({}, {}, {}));
  CHECK(jacobian_numeric(zero, Vector2<double>(0.3, 0.2)).isZero());
}

TEST_CASE("symbolic Jacobian matches central differences", "[dynamics][property]")
{
  testing::Random rng(53);
  for (int i = 0; i < 30; ++i) {
    PlanarField const F = pushforward(build_cubic(rng.decomposition()));
    PlanarJacobian<double> const jac(F);
    Vector2<double> const p(rng.real(-0.8, 0.8), rng.real(-0.5, 0.5));
    Matrix2<double> const J = jac(p);
    double const h = 1e-6;
    Matrix2<double> fd;
    for (int col = 0; col < 2; ++col) {
      Vector2<double> e = Vector2<double>::Zero();
      e(col) = h;
      Vector2<double> const a = p + e, b = p - e;
      fd(0, col) = (evaluate(F.Pcal, {a(0), a(1)}) - evaluate(F.Pcal, {b(0), b(1)})) / (2 * h);
      fd(1, col) = (evaluate(F.Qcal, {a(0), a(1)}) - evaluate(F.Qcal, {b(0), b(1)})) / (2 * h);
    }
    CHECK((J - fd).cwiseAbs().maxCoeff() <= 1e-4 * (1 + J.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("classify", "[dynamics]")
{
  Matrix2<double> J;
  J << 2, 0, 0, 2;
  CHECK(classify(J) == Classification::UnstableNode);
  J << -1, 0, 0, -3;
  CHECK(classify(J) == Classification::StableNode);
  J << 8, 0, 0, -40;
  CHECK(classify(J) == Classification::Saddle);
  J << -0.1, 1, -1, -0.1;
  CHECK(classify(J) == Classification::StableFocus);
  J << 0.1, 1, -1, 0.1;
  CHECK(classify(J) == Classification::UnstableFocus);
  J << 0, 1, -1, 0;
  CHECK(classify(J) == Classification::CenterOrFocus);
  J << 0, 1, 0, 0;
  CHECK(classify(J) == Classification::Degenerate);
  J << 0, 0, 0, 0;
  CHECK(classify(J) == Classification::Degenerate);
}

TEST_CASE("eigenvalues are roots of the characteristic polynomial", "[dynamics][property]")
{
  testing::Random rng(54);
  for (int i = 0; i < 200; ++i) {
    Matrix2<double> J;
    J << rng.real(-50, 50), rng.real(-50, 50), rng.real(-50, 50), rng.real(-50, 50);
    CharacteristicData const c = characteristic(J);
    CHECK(c.trace == Catch::Approx(J.trace()));
    CHECK(c.determinant == Catch::Approx(J.determinant()).margin(1e-9));
    for (auto const &l : c.eigenvalues) {
      std::complex<double> const value = l * l - c.trace * l + c.determinant;
      CHECK(std::abs(value) <= 1e-9 * (1 + std::norm(l)));
    }
  }
}

TEST_CASE("interior characteristic data", "[dynamics]")
{
  SECTION("A = 5, B = -1, C = 2")
  {
    InteriorCharacteristicData const d = interior_characteristic_data(kolmo(5, -1, 2));
    // 60-digit oracle: symbolic Jacobian of the pushforward evaluated at (u0, v0).
    Real50 const delta_oracle("-124.52178045261694760082280700563657580469716782391");
    CHECK(abs(d.Delta - delta_oracle) < Real50("1e-40"));
    CHECK(abs(d.F) < Real50("1e-40"));
    CHECK(std::abs(to_double((-1 + 2) * d.F) - (-0.0001)) <= 2e-4);
    CHECK(std::abs(to_double(d.Pv)) == Catch::Approx(5.579466382473707216).epsilon(1e-15));
    CHECK(to_double(d.u0) == Catch::Approx(std::sqrt(2.0) / (std::sqrt(8.0) + std::sqrt(5.0))));
    CHECK(to_double(d.v0) == Catch::Approx(1 / (std::sqrt(8.0) + std::sqrt(5.0))));
    CHECK(abs(d.factor_plus * d.factor_minus - d.Delta) < Real50("1e-40"));

    // Reference value Delta ~ -123.54 agrees only to about 1%.
    CHECK(std::abs(to_double(d.Delta) - (-123.54)) < 1.0);

    // The point itself: the numeric Jacobian there has the oracle entries.
    PlanarField const F = pushforward(build_kolmogorov(kolmo(5, -1, 2)));
    Vector2<double> const p(to_double(d.u0), to_double(d.v0));
    CHECK(std::abs(evaluate(F.Pcal, {p(0), p(1)})) < 1e-14);
    CHECK(std::abs(evaluate(F.Qcal, {p(0), p(1)})) < 1e-14);
    Matrix2<double> const J = jacobian_numeric(F, p);
    CHECK(J(0, 1) == Catch::Approx(5.579466382473707216));
    CHECK(J(1, 0) == Catch::Approx(-5.579466382473707216));
    CHECK(classify(J) == Classification::CenterOrFocus);
  }
  SECTION("condition (b) and another parameter set")
  {
    InteriorCharacteristicData const b = interior_characteristic_data(kolmo(-5, 1, -2));
    CHECK(abs(b.Delta - Real50("-124.52178045261694760082280700563657580469716782391")) < Real50("1e-40"));
    InteriorCharacteristicData const other = interior_characteristic_data(kolmo(1, -3, 2));
    CHECK(abs(other.Delta - Real50("-260.36525346743333194487833017788248375021558087365")) < Real50("1e-40"));
  }
  SECTION("large-A limits of the two factors")
  {
    InteriorCharacteristicData const d = interior_characteristic_data(kolmo(1000000, -1, 2));
    double const target = 8 * std::sqrt(2.0);
    CHECK(to_double(d.factor_plus) == Catch::Approx(-target).epsilon(0.01));
    CHECK(to_double(d.factor_minus) == Catch::Approx(target).epsilon(0.01));
  }
  SECTION("precondition")
  {
    CHECK_THROWS_AS(interior_characteristic_data(kolmo(1, 1, 1)), std::domain_error);
  }
}

TEST_CASE("no_periodic_orbit_predicate", "[dynamics]")
{
  CHECK(no_periodic_orbit_predicate(kolmo(1, 1, 1)));
  CHECK_FALSE(no_periodic_orbit_predicate(kolmo(5, -1, 2)));
  CHECK(no_periodic_orbit_predicate(kolmo(0, 1, 1)));
  CHECK(kolmogorov_degenerate(kolmo(0, 1, 1)));
  CHECK(boundary_is_singular(pushforward(build_kolmogorov(kolmo(0, 1, 1)))));
  CHECK_FALSE(boundary_is_singular(pushforward(build_kolmogorov(kolmo(1, 1, 1)))));
}

TEST_CASE("analysis of Kolmogorov singular points", "[dynamics]")
{
  SECTION("A = B = C = 1")
  {
    auto const reports = analyze_kolmogorov(kolmo(1, 1, 1));
    REQUIRE(reports.size() == 6);
    for (auto const &r : reports) {
      auto const &e = *r.exact_point;
      if (e[2] == 1) CHECK(r.classification == Classification::UnstableNode);
      if (e[0] == 1) CHECK(r.classification == Classification::StableNode);
      if (e[1] == 1) CHECK(r.classification == Classification::Saddle);
    }
  }
  SECTION("antipodal points share their classification")
  {
    testing::Random rng(55);
    for (int i = 0; i < 30; ++i) {
      auto const reports = analyze_kolmogorov(rng.kolmogorov_nonzero());
      for (auto const &p : reports) {
        for (auto const &q : reports) {
          bool const antipodal = std::abs(p.sphere_point[0] + q.sphere_point[0]) < 1e-12 &&
                                 std::abs(p.sphere_point[1] + q.sphere_point[1]) < 1e-12 &&
                                 std::abs(p.sphere_point[2] + q.sphere_point[2]) < 1e-12;
          if (antipodal) {
            CHECK(p.classification == q.classification);
          }
        }
      }
    }
  }
  SECTION("interior points of A = 5, B = -1, C = 2")
  {
    int interior = 0;
    for (auto const &r : analyze_kolmogorov(kolmo(5, -1, 2))) {
      if (r.squared_point && r.in_closed_disk()) {
        ++interior;
        CHECK(r.classification == Classification::CenterOrFocus);
        CHECK(r.discriminant == Catch::Approx(-124.52178045261694).epsilon(1e-10));
      }
    }
    CHECK(interior == 4);
  }
  SECTION("numeric finder recovers the closed-form points in the disk")
  {
    PlanarField const F = pushforward(build_kolmogorov(kolmo(5, -1, 2)));
    auto const found = find_planar_singularities(F);
    int matched = 0;
    for (auto const &r : analyze_kolmogorov(kolmo(5, -1, 2))) {
      if (!r.in_closed_disk()) continue;
      for (auto const &f : found) {
        if (std::hypot(f[0] - (*r.planar)[0], f[1] - (*r.planar)[1]) < 1e-8) {
          ++matched;
          break;
        }
      }
    }
    CHECK(matched == 9); // origin, four axis images on the boundary, four interior points
  }
}

TEST_CASE("planar integration", "[dynamics][integrate]")
{
  PlanarField const F = pushforward(build_kolmogorov(kolmo(1, 1, 1)));
  SECTION("start at a singular point")
  {
    Trajectory<2> const t = integrate(F, Eigen::Vector2d(0, 0), 5.0);
    CHECK(t.stop == StopReason::SingularApproach);
    CHECK(t.points.back().norm() == 0.0);
  }
  SECTION("flows away from the unstable node at the origin")
  {
    Trajectory<2> const t = integrate(F, Eigen::Vector2d(0.1, 0.1), 0.5);
    CHECK(t.points.back().norm() > t.points.front().norm());
    Trajectory<2> const back = integrate(F, Eigen::Vector2d(0.1, 0.1), -0.5);
    CHECK(back.points.back().norm() < 0.1 * std::sqrt(2.0));
    CHECK(back.times.back() < 0);
  }
  SECTION("the invariant boundary is kept")
  {
    double const angle = 0.7;
    Trajectory<2> const t = integrate(F, Eigen::Vector2d(std::cos(angle), std::sin(angle)), 3.0);
    for (auto const &p : t.points) {
      CHECK(std::abs(p.norm() - 1) <= 1e-6);
    }
  }
  SECTION("start outside the disk")
  {
    CHECK_THROWS_AS(integrate(F, Eigen::Vector2d(1.5, 0), 1.0), std::invalid_argument);
  }
}

TEST_CASE("sphere integration", "[dynamics][integrate]")
{
  SECTION("North pole of a Kolmogorov field")
  {
    Trajectory<3> const t = integrate_on_sphere(build_kolmogorov(kolmo(5, -1, 2)), Eigen::Vector3d(0, 0, 1), 1.0);
    CHECK((t.points.back() - Eigen::Vector3d(0, 0, 1)).norm() == 0.0);
  }
  SECTION("integrable family keeps both first integrals")
  {
    SphereField const X = build_integrable_family(1, 2, -1, 3, poly("x^2 + y*z"));
    Eigen::Vector3d const start = Eigen::Vector3d(0.3, -0.5, 0.2).normalized();
    Trajectory<3> const t = integrate_on_sphere(X, start, 5.0);
    double const level = start.dot(Eigen::Vector3d(1, 2, -1));
    for (auto const &p : t.points) {
      CHECK(std::abs(p.dot(Eigen::Vector3d(1, 2, -1)) - level) <= 1e-6);
      CHECK(std::abs(p.norm() - 1) <= 1e-9);
    }
  }
  SECTION("drift per unit time")
  {
    testing::Random rng(56);
    for (int i = 0; i < 5; ++i) {
      SphereField const X = build_kolmogorov(rng.kolmogorov());
      Eigen::Vector3d const start = Eigen::Vector3d(rng.real(-1, 1), rng.real(-1, 1), rng.real(-1, 1)).normalized();
      double const T = 2.0;
      Trajectory<3> const t = integrate_on_sphere(X, start, T);
      double const elapsed = std::abs(t.times.back());
      if (elapsed > 0) {
        CHECK(t.total_drift / elapsed < 1e-6);
      }
    }
  }
  SECTION("rotating equator: the great circle z = 0 is a closed orbit")
  {
    SphereField const X = build_cubic({{}, {}, {}, poly("x^2 + y^2"), poly("y^2 + x*y"), poly("-x^2 - x*y")});
    // On z = 0 the field is (y, -x): unit speed, period 2 pi.
    Trajectory<3> const t = integrate_on_sphere(X, Eigen::Vector3d(1, 0, 0), 2 * std::numbers::pi);
    CHECK(t.stop == StopReason::Completed);
    CHECK((t.points.back() - Eigen::Vector3d(1, 0, 0)).norm() < 1e-4);
    for (auto const &p : t.points) {
      CHECK(std::abs(p(2)) < 1e-12);
    }
  }
  SECTION("start off the sphere")
  {
    CHECK_THROWS_AS(integrate_on_sphere(build_kolmogorov(kolmo(1, 1, 1)), Eigen::Vector3d(1, 1, 0), 1.0),
                    std::invalid_argument);
  }
}

TEST_CASE("interior points of A = 5, B = -1, C = 2 are centers", "[dynamics][integrate]")
{
  // With alpha = beta = gamma = 0, H = x^C y^(-B) z^A is a first integral; here H = x^2 y z^5.
  SphereField const X = build_kolmogorov(kolmo(5, -1, 2));
  CHECK(lie_derivative(X, poly("x^2*y*z^5")).is_zero());
  testing::Random rng(57);
  for (int i = 0; i < 20; ++i) {
    auto const [A, B, C] = std::array<Rational, 3>{rng.nonzero(), rng.nonzero(), rng.nonzero()};
    // Integer exponents need only a common denominator; check the rational-exponent identity through cofactors.
    SphereField const Y = build_kolmogorov({0, 0, 0, A, B, C});
    Polynomial const K = C * cofactor_of(Y, poly("x"))->cofactor - B * cofactor_of(Y, poly("y"))->cofactor +
                         A * cofactor_of(Y, poly("z"))->cofactor;
    CHECK(K.is_zero());
  }

  Eigen::Vector3d const centre(0.5, std::sqrt(0.125), std::sqrt(0.625));
  Eigen::Vector3d const start = (centre + Eigen::Vector3d(0.02, -0.01, 0.0)).normalized();
  auto const H = [](Eigen::Vector3d const &p) { return p(0) * p(0) * p(1) * std::pow(p(2), 5); };
  IntegrationControls controls;
  controls.rtol = 1e-10;
  controls.atol = 1e-12;
  Trajectory<3> const t = integrate_on_sphere(X, start, 10.0, controls);
  double const r0 = (start - centre).norm();
  double closest_return = 1.0;
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    auto const &p = t.points[i];
    CHECK(std::abs(H(p) - H(start)) <= 1e-8 * std::abs(H(start)));
    double const r = (p - centre).norm();
    CHECK(r > 0.3 * r0);
    CHECK(r < 3.0 * r0);
    if (t.times[i] > 0.5) closest_return = std::min(closest_return, (p - start).norm());
  }
  CHECK(closest_return < 1e-3);
}
