// sphereflow: command-line front end over the library.
// Exit codes: 0 success, 1 usage, 2 spec/parse error, 3 analysis error.

#include "sphereflow/darboux.hpp"
#include "sphereflow/dynamics.hpp"
#include "sphereflow/field_spec.hpp"
#include "sphereflow/great_circles.hpp"
#include "sphereflow/integrator.hpp"
#include "sphereflow/poly_io.hpp"
#include "sphereflow/portrait.hpp"
#include "sphereflow/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace sphereflow;

namespace {

struct SpecFailure : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::vector<Polynomial> parse_list(std::string const &text)
{
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t const end = text.find(',', start);
    std::string const item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    out.push_back(parse_polynomial(item));
    if (end == std::string::npos) {
      break;
    }
    start = end + 1;
  }
  return out;
}

std::vector<double> parse_numbers(std::string const &text)
{
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    std::size_t const end = text.find(',', start);
    std::string const item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    try {
      out.push_back(parse_rational(item).get_d());
    } catch (std::exception const &) {
      try {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) {
          throw SpecFailure("bad number '" + item + "'");
        }
      } catch (std::logic_error const &) {
        throw SpecFailure("bad number '" + item + "'");
      }
    }
    if (end == std::string::npos) {
      break;
    }
    start = end + 1;
  }
  return out;
}

void emit(Json const &j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Cubic vector fields on the sphere: invariant sets, projection and phase portraits"};
  app.require_subcommand(1);
  std::string spec_path;

  auto *cofactor = app.add_subcommand("cofactor", "Cofactor of an invariant algebraic set f = 0");
  std::string poly_text;
  cofactor->add_option("--spec", spec_path, "Field spec file")->required();
  cofactor->add_option("--poly", poly_text, "Polynomial f")->required();

  auto *extactic_cmd = app.add_subcommand("extactic", "Extactic polynomial for a basis");
  std::string basis_text;
  std::string multiplicity_text;
  extactic_cmd->add_option("--spec", spec_path, "Field spec file")->required();
  extactic_cmd->add_option("--basis", basis_text, "Comma-separated basis, e.g. x,y,z")->required();
  extactic_cmd->add_option("--multiplicity", multiplicity_text, "Also report the multiplicity of this polynomial");

  auto *first = app.add_subcommand("first-integral", "Test whether H is a first integral");
  first->add_option("--spec", spec_path, "Field spec file")->required();
  first->add_option("--poly", poly_text, "Polynomial H")->required();

  auto *circles = app.add_subcommand("circles", "Invariant circles");
  std::string circle_text;
  GreatCircleSearch search;
  circles->add_option("--spec", spec_path, "Field spec file")->required();
  circles->add_option("--circle", circle_text, "Test one plane a,b,c,d instead of searching");
  circles->add_option("--grid", search.grid_points, "Fibonacci grid size")->check(CLI::PositiveNumber);
  circles->add_option("--tol", search.tolerance, "Relative residual tolerance")->check(CLI::PositiveNumber);

  auto *push = app.add_subcommand("pushforward", "Stereographic pushforward (Pcal, Qcal)");
  push->add_option("--spec", spec_path, "Field spec file")->required();

  auto *periodic = app.add_subcommand("periodic", "Is the invariant great circle z = 0 a periodic orbit");
  periodic->add_option("--spec", spec_path, "Field spec file")->required();

  auto *singular = app.add_subcommand("singular", "Singular points and their classification");
  singular->add_option("--spec", spec_path, "Field spec file")->required();

  auto *integrate_cmd = app.add_subcommand("integrate", "Integrate one trajectory; CSV on stdout");
  std::string start_text;
  double duration = 1.0;
  IntegrationControls controls;
  integrate_cmd->add_option("--spec", spec_path, "Field spec file")->required();
  integrate_cmd->add_option("--start", start_text, "u,v in the disk, or x,y,z on the sphere")->required();
  integrate_cmd->add_option("--duration", duration, "Signed duration");
  integrate_cmd->add_option("--tol", controls.rtol, "Relative tolerance")->check(CLI::PositiveNumber);

  auto *portrait = app.add_subcommand("portrait", "SVG phase portrait and JSON report");
  std::string out_svg, out_json;
  std::optional<std::uint64_t> seed;
  std::optional<int> rings, spokes;
  std::optional<double> portrait_duration, tol;
  portrait->add_option("--spec", spec_path, "Field spec file")->required();
  portrait->add_option("--out-svg", out_svg, "SVG output path")->required();
  portrait->add_option("--out-json", out_json, "JSON output path")->required();
  portrait->add_option("--seed", seed, "Seed for the angular offset of the seed pattern");
  portrait->add_option("--rings", rings, "Seed rings")->check(CLI::PositiveNumber);
  portrait->add_option("--spokes", spokes, "Seed spokes")->check(CLI::PositiveNumber);
  portrait->add_option("--duration", portrait_duration, "Integration time each way")->check(CLI::PositiveNumber);
  portrait->add_option("--tol", tol, "Relative tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  std::optional<FieldSpec> loaded;
  try {
    loaded = load_field_spec(spec_path);
  } catch (std::exception const &e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  }
  FieldSpec const &spec = *loaded;
  SphereField const &field = spec.field;

  try {
    if (*cofactor) {
      Polynomial const f = parse_polynomial(poly_text);
      if (f.is_zero()) {
        throw SpecFailure("--poly must be nonzero");
      }
      auto const report = cofactor_of(field, f);
      Json j{{"polynomial", to_json(f)}, {"invariant", report.has_value()}};
      if (report) {
        j["cofactor"] = to_json(report->cofactor);
      }
      emit(j);
    } else if (*extactic_cmd) {
      auto const basis = parse_list(basis_text);
      Polynomial const E = extactic(field, basis);
      Json j{{"basis", basis_text}, {"extactic", to_json(E)}};
      if (!multiplicity_text.empty()) {
        Multiplicity const m = invariant_multiplicity(field, parse_polynomial(multiplicity_text), basis);
        j["multiplicity"] = m.infinite ? Json("infinite") : Json(m.value);
      }
      emit(j);
    } else if (*first) {
      Polynomial const H = parse_polynomial(poly_text);
      emit({{"polynomial", to_json(H)},
            {"first_integral", is_first_integral(field, H)},
            {"lie_derivative", to_json(lie_derivative(field, H))}});
    } else if (*circles) {
      if (!circle_text.empty()) {
        auto const parts = parse_list(circle_text);
        if (parts.size() != 4 || std::any_of(parts.begin(), parts.end(), [](auto const &p) { return !p.is_constant(); })) {
          throw SpecFailure("--circle expects four rationals a,b,c,d");
        }
        CircleSpec const circle{parts[0].constant_term(), parts[1].constant_term(), parts[2].constant_term(),
                                parts[3].constant_term()};
        circle.validate();
        auto const report = check_invariant_circle(field, circle);
        Json j{{"circle", to_json(circle)}, {"great", circle.is_great()}, {"invariant", report.has_value()}};
        if (report) {
          j["polynomial"] = to_json(report->polynomial);
          j["cofactor"] = to_json(report->cofactor);
        }
        emit(j);
      } else {
        emit(to_json(solve_great_circles_homogeneous(field, search)));
      }
    } else if (*push) {
      PlanarField const planar = pushforward(field);
      radial_derivative(planar);
      emit(to_json(planar));
    } else if (*periodic) {
      if (!field.decomposition()) {
        throw std::invalid_argument("field has no cubic decomposition");
      }
      emit(to_json(great_circle_is_periodic(*field.decomposition())));
    } else if (*singular) {
      std::vector<SingularityReport> reports;
      if (field.kolmogorov()) {
        reports = analyze_kolmogorov(*field.kolmogorov());
      } else {
        PlanarField const planar = pushforward(field);
        for (auto const &p : find_planar_singularities(planar, 41, boundary_is_singular(planar))) {
          SingularityReport r;
          double const rho = p[0] * p[0] + p[1] * p[1];
          r.sphere_point = {2 * p[0] / (1 + rho), 2 * p[1] / (1 + rho), (1 - rho) / (1 + rho)};
          r.planar = p;
          reports.push_back(std::move(r));
        }
        analyze_singularities(field, reports);
      }
      Json j = Json::array();
      for (auto const &r : reports) {
        j.push_back(to_json(r));
      }
      emit(j);
    } else if (*integrate_cmd) {
      auto const start = parse_numbers(start_text);
      if (start.size() == 2) {
        auto const t = integrate(pushforward(field), Eigen::Vector2d(start[0], start[1]), duration, controls);
        std::printf("t,u,v\n");
        for (std::size_t i = 0; i < t.times.size(); ++i) {
          std::printf("%.12g,%.12g,%.12g\n", t.times[i], t.points[i](0), t.points[i](1));
        }
        std::fprintf(stderr, "stop: %s\n", std::string(to_string(t.stop)).c_str());
      } else if (start.size() == 3) {
        auto const t =
          integrate_on_sphere(field, Eigen::Vector3d(start[0], start[1], start[2]), duration, controls);
        std::printf("t,x,y,z\n");
        for (std::size_t i = 0; i < t.times.size(); ++i) {
          std::printf("%.12g,%.12g,%.12g,%.12g\n", t.times[i], t.points[i](0), t.points[i](1), t.points[i](2));
        }
        std::fprintf(stderr, "stop: %s\n", std::string(to_string(t.stop)).c_str());
      } else {
        throw SpecFailure("--start expects 2 or 3 numbers");
      }
    } else if (*portrait) {
      PortraitSettings settings = spec.portrait.value_or(PortraitSettings{});
      if (seed) settings.seed = *seed;
      if (rings) settings.rings = *rings;
      if (spokes) settings.spokes = *spokes;
      if (portrait_duration) settings.duration = *portrait_duration;
      if (tol) settings.tolerance = *tol;
      PortraitOutput const out = run_portrait(field, settings);
      std::ofstream svg(out_svg, std::ios::binary);
      std::ofstream json(out_json, std::ios::binary);
      if (!svg || !json) {
        std::cerr << "cannot open output files\n";
        return 2;
      }
      svg << out.svg;
      json << out.report.dump(2) << "\n";
      std::cout << out.report["signature"].get<std::string>() << "\n";
    }
  } catch (SpecFailure const &e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (ParseError const &e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const &e) {
    std::cerr << "analysis error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
