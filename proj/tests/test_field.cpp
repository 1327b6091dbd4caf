#include "catch_amalgamated.hpp"

#include "sphereflow/field_spec.hpp"
#include "support.hpp"

using namespace sphereflow;
using testing::poly;

TEST_CASE("build_cubic", "[field]")
{
  SECTION("rotating equator field")
  {
    SphereField const X = build_cubic({Polynomial(), Polynomial(), Polynomial(), poly("x^2 + y^2"), poly("y^2 + x*y"),
                                       poly("-x^2 - x*y")});
    CHECK(X.P() == poly("x^2*y + y^3 + x*y*z + y^2*z"));
    CHECK(X.Q() == poly("-x^3 - x*y^2 - x^2*z - x*y*z"));
    CHECK(X.R().is_zero());
    CHECK(X.family() == Family::HomogeneousCubic);
    CHECK(*X.sphere_cofactor() == Polynomial());
  }
  SECTION("zero inputs")
  {
    SphereField const X = build_cubic({});
    CHECK(X.P().is_zero());
    CHECK(X.Q().is_zero());
    CHECK(X.R().is_zero());
  }
  SECTION("f = x")
  {
    SphereField const X = build_cubic({poly("x"), Polynomial(), Polynomial(), Polynomial(), Polynomial(), Polynomial()});
    CHECK(X.P() == poly("x*(1 - x^2 - y^2 - z^2)"));
    CHECK(X.Q().is_zero());
    CHECK(*X.sphere_cofactor() == poly("-2*x^2"));
  }
  SECTION("constraint violations")
  {
    CHECK_THROWS_AS(build_cubic({poly("x^2"), {}, {}, {}, {}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(build_cubic({{}, {}, {}, poly("x^3"), {}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(build_cubic({{}, {}, {}, {}, poly("x + 1"), {}}), std::invalid_argument);
  }
}

TEST_CASE("build_kolmogorov", "[field]")
{
  SphereField const X = build_kolmogorov({0, 0, 0, 5, -1, 2});
  CHECK(X.P() == poly("x*(5*y^2 - z^2)"));
  CHECK(X.Q() == poly("y*(-5*x^2 + 2*z^2)"));
  CHECK(X.R() == poly("z*(x^2 - 2*y^2)"));
  CHECK(X.family() == Family::Kolmogorov);

  SphereField const zero = build_kolmogorov({0, 0, 0, 0, 0, 0});
  CHECK(zero.P().is_zero());

  SphereField const linear = build_kolmogorov({1, 2, 3, 0, 0, 0});
  CHECK(*tangency_cofactor(linear) == poly("-2*(x^2 + 2*y^2 + 3*z^2)"));
}

TEST_CASE("build_homogeneous", "[field]")
{
  SphereField const two = build_homogeneous(poly("x^2 + y^2 + 2*x*y + x*z + y*z"), poly("(-y + z)*z"), poly("(x - z)*z"));
  CHECK(two.P() == poly("x^2*y + y^3 + 2*x*y^2 + x*y*z + y^2*z - y*z^2 + z^3"));
  CHECK(two.Q() == poly("-x^3 - x*y^2 - 2*x^2*y - x^2*z - x*y*z + x*z^2 - z^3"));
  CHECK(two.R() == poly("-x*z^2 + y*z^2"));

  CHECK(build_homogeneous({}, {}, {}).P().is_zero());

  SphereField const zz = build_homogeneous(poly("z^2"), {}, {});
  CHECK(zz.P() == poly("y*z^2"));
  CHECK(zz.Q() == poly("-x*z^2"));
  CHECK(zz.R().is_zero());
  CHECK((zz.P() * poly("x") + zz.Q() * poly("y") + zz.R() * poly("z")).is_zero());

  CHECK_THROWS_AS(build_homogeneous(poly("x"), {}, {}), std::invalid_argument);
}

TEST_CASE("decompose_cubic", "[field]")
{
  SECTION("Kolmogorov pattern")
  {
    CubicDecomposition const d = decompose_cubic(build_kolmogorov({1, -2, 3, 5, -1, 2}));
    CHECK(d.f == poly("x"));
    CHECK(d.g == poly("-2*y"));
    CHECK(d.h == poly("3*z"));
    CHECK(d.A == poly("5*x*y"));
    CHECK(d.B == poly("-x*z"));
    CHECK(d.C == poly("2*y*z"));
  }
  SECTION("zero field")
  {
    CHECK(decompose_cubic(build_cubic({})) == CubicDecomposition{});
  }
  SECTION("non-tangent input")
  {
    SphereField const radial = SphereField::from_components(poly("x"), poly("y"), poly("z"));
    CHECK(radial.family() == Family::Unverified);
    CHECK_THROWS_AS(decompose_cubic(radial), std::domain_error);
  }
}

TEST_CASE("tangency_cofactor", "[field]")
{
  CHECK(*tangency_cofactor(Polynomial(), Polynomial(), Polynomial()) == Polynomial());
  CHECK_FALSE(tangency_cofactor(poly("x"), poly("y"), poly("z")));
  testing::Random rng(21);
  for (int i = 0; i < 20; ++i) {
    CubicDecomposition const d = rng.decomposition();
    SphereField const X = build_cubic(d);
    CHECK(*tangency_cofactor(X) == Rational(-2) * (d.f * poly("x") + d.g * poly("y") + d.h * poly("z")));
  }
}

TEST_CASE("field-builder properties", "[field][property]")
{
  testing::Random rng(22);
  auto const [x, y, z] = sphere_vars();
  for (int i = 0; i < 50; ++i) {
    CubicDecomposition const d = rng.canonical_decomposition();
    CHECK(decompose_cubic(build_cubic(d)) == d);

    KolmogorovParams const k = rng.kolmogorov();
    SphereField const K = build_kolmogorov(k);
    CHECK(tangency_cofactor(K));
    CHECK(exact_divide(K.P(), x));
    CHECK(exact_divide(K.Q(), y));
    CHECK(exact_divide(K.R(), z));
    SphereField const mirrored = antipodal_image(K);
    CHECK(mirrored.P() == -K.P());
    CHECK(mirrored.Q() == -K.Q());
    CHECK(mirrored.R() == -K.R());

    SphereField const H = rng.homogeneous();
    CHECK((H.P() * x + H.Q() * y + H.R() * z).is_zero());
  }
}

TEST_CASE("syzygy shift leaves the field unchanged", "[field]")
{
  testing::Random rng(23);
  auto const [x, y, z] = sphere_vars();
  for (int i = 0; i < 20; ++i) {
    CubicDecomposition d = rng.decomposition();
    d.A = homogeneous_component(d.A, 1) + homogeneous_component(d.A, 2);
    Polynomial const M = rng.polynomial(1, 1);
    CubicDecomposition shifted = d;
    shifted.A = d.A + M * z;
    shifted.B = d.B - M * y;
    shifted.C = d.C + M * x;
    CHECK(build_cubic(shifted) == build_cubic(d));
    CHECK(canonicalize(shifted) == canonicalize(d));
  }
}

TEST_CASE("field spec files", "[field][io]")
{
  FieldSpec const k = parse_field_spec("# the worked example\nkolmogorov { A = 5, B = -1, C = 2 }\n");
  CHECK(k.source == "kolmogorov");
  CHECK(*k.field.kolmogorov() == KolmogorovParams{0, 0, 0, 5, -1, 2});
  CHECK_FALSE(k.portrait);

  FieldSpec const raw = parse_field_spec("P = y*z^2\nQ = -x*z^2\nR = 0\nportrait { rings = 4, spokes = 6, arrows = false }");
  CHECK(raw.field.family() == Family::HomogeneousCubic);
  REQUIRE(raw.portrait);
  CHECK(raw.portrait->rings == 4);
  CHECK(raw.portrait->spokes == 6);
  CHECK_FALSE(raw.portrait->arrows);

  FieldSpec const cubic = parse_field_spec("cubic {\n f = x\n A = x^2 + y^2\n}");
  CHECK(cubic.field.P() == poly("x*(1 - x^2 - y^2 - z^2) + (x^2 + y^2)*y"));

  FieldSpec const integrable = parse_field_spec("integrable { a = 1, b = 1, c = 1, gamma = 1, C = x^2 + y*z }");
  CHECK(integrable.source == "integrable");

  CHECK_THROWS_AS(parse_field_spec(""), SpecError);
  CHECK_THROWS_AS(parse_field_spec("kolmogorov { A = 1, a = 2 }"), SpecError);
  CHECK_THROWS_AS(parse_field_spec("kolmogorov { A = 1 }\nhomogeneous { A = x^2 }"), SpecError);
  CHECK_THROWS_AS(parse_field_spec("kolmogorov { D = 1 }"), SpecError);
  CHECK_THROWS_AS(parse_field_spec("homogeneous { A = x + }"), SpecError);
  CHECK_THROWS_AS(parse_field_spec("homogeneous { A = u^2 }"), SpecError);
  CHECK_THROWS_AS(parse_field_spec("kolmogorov { A = 1 "), SpecError);
  CHECK_THROWS_AS(parse_field_spec("kolmogorov { A = 1 }\nportrait { rings = 0 }"), SpecError);
  CHECK_THROWS_AS(load_field_spec("/nonexistent/field.spec"), SpecError);
}
